#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "rootforge/errors.hpp"
#include "rootforge/induction.hpp"
#include "rootforge/io.hpp"
#include "rootforge/splitting.hpp"
#include "support.hpp"

using namespace rootforge;

namespace {

const RootSystem& h4() {
  static const RootSystem rs = h4_root_system();
  return rs;
}

struct Expected {
  std::string label;
  std::size_t sub_vertices, sub_edges, complement_vertices, complement_edges;
};

const std::vector<Expected> kExpected{{"H2+H2", 20, 20, 100, 500},
                                      {"D4", 24, 96, 96, 432},
                                      {"A1^4", 8, 24, 112, 624},
                                      {"A2+A2", 12, 12, 108, 576},
                                      {"A4", 20, 60, 100, 480}};

VertexSet whole() { return VertexSet{h4().roots, "600-cell"}; }

// Brute-force edge oracle: collect every pairwise inner product, take the
// largest one below 1, then list the pairs attaining it.
std::set<std::pair<std::size_t, std::size_t>> oracle_edges(const std::vector<Multivector>& v) {
  FieldElement best;
  bool have = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const FieldElement x = spinor_inner(Spinor(v[i]), Spinor(v[j]));
      if (x < FieldElement(1) && (!have || best < x)) {
        best = x;
        have = true;
      }
    }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (spinor_inner(Spinor(v[i]), Spinor(v[j])) == best) out.insert({i, j});
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> as_set(const EdgeSet& es) {
  return {es.edges.begin(), es.edges.end()};
}

}  // namespace

TEST_CASE("600-cell edges") {
  const EdgeSet es = edges(whole());
  CHECK(es.size() == 720);
  CHECK(es.edge_inner == FieldElement::tau() * FieldElement::fraction(1, 2));
  std::vector<int> degree(120, 0);
  for (const auto& [i, j] : es.edges) {
    CHECK(i < j);
    ++degree[i];
    ++degree[j];
  }
  CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 12; }));
  CHECK(std::is_sorted(es.edges.begin(), es.edges.end()));
}

TEST_CASE("split counts, edges and invariance") {
  for (const auto& x : kExpected) {
    CAPTURE(x.label);
    const RootSystem sub = named_subsystem(x.label);
    const auto [s, c] = split(h4(), sub);
    CHECK(s.size() == x.sub_vertices);
    CHECK(c.size() == x.complement_vertices);
    const EdgeSet se = edges(s), ce = edges(c);
    CHECK(se.size() == x.sub_edges);
    CHECK(ce.size() == x.complement_edges);
    CHECK(as_set(se) == oracle_edges(s.vertices));
    CHECK(as_set(ce) == oracle_edges(c.vertices));
    for (const auto& [i, j] : ce.edges) CHECK(spinor_inner(Spinor(c.vertices[i]), Spinor(c.vertices[j])) == ce.edge_inner);
    CHECK(verify_invariance(s, sub));
    CHECK(verify_invariance(c, sub));
    for (const auto& v : c.vertices) CHECK_FALSE(sub.contains(v));
  }
}

TEST_CASE("complement edges agree with the restricted 600-cell graph") {
  const VertexSet all = whole();
  const EdgeSet big = edges(all);
  for (const auto& x : kExpected) {
    CAPTURE(x.label);
    const auto [s, c] = split(h4(), named_subsystem(x.label));
    std::vector<std::size_t> position(all.size(), SIZE_MAX);
    for (std::size_t k = 0; k < c.size(); ++k)
      position[static_cast<std::size_t>(std::find(all.vertices.begin(), all.vertices.end(), c.vertices[k]) -
                                        all.vertices.begin())] = k;
    std::set<std::pair<std::size_t, std::size_t>> restricted;
    for (const auto& [i, j] : big.edges)
      if (position[i] != SIZE_MAX && position[j] != SIZE_MAX)
        restricted.insert(std::minmax(position[i], position[j]));
    CHECK(restricted == as_set(edges(c)));
  }
}

TEST_CASE("D4 edges sit at inner product one half") {
  const auto [s, c] = split(h4(), named_subsystem("D4"));
  CHECK(edges(s).edge_inner == FieldElement::fraction(1, 2));
  CHECK(edges(c).edge_inner == FieldElement::tau() * FieldElement::fraction(1, 2));
  const auto [a, b] = split(h4(), named_subsystem("A1^4"));
  CHECK(edges(a).edge_inner == FieldElement(0));
}

TEST_CASE("invariance fails once a vertex is dropped") {
  const RootSystem sub = named_subsystem("H2+H2");
  VertexSet v = whole();
  v.vertices.erase(v.vertices.begin() + 17);
  CHECK_FALSE(verify_invariance(v, sub));
  CHECK(verify_invariance(whole(), sub));
}

TEST_CASE("vertex sets match the reference tables") {
  for (const std::string label : {"H2+H2", "D4", "A2+A2", "A4"}) {
    CAPTURE(label);
    const auto rows = testsupport::rows_of(label);
    const RootSystem sub = named_subsystem(label);
    REQUIRE(rows.size() == sub.size());
    for (const auto& r : rows) CHECK(sub.contains(r.value));
  }
}

TEST_CASE("errors") {
  RootSystem foreign{Ambient::Dim4Spinor, {Multivector::blade(kE12, FieldElement::sqrt2() / FieldElement(2)) +
                                           Multivector(FieldElement::sqrt2() / FieldElement(2))},
                     {}};
  CHECK_THROWS_AS(split(h4(), foreign), SubsetError);
  CHECK_THROWS_AS(edges(VertexSet{{Multivector(FieldElement(1))}, "one"}), ContractError);
  CHECK_THROWS_AS(edges(VertexSet{}), ContractError);
}

TEST_CASE("json export") {
  const auto [s, c] = split(h4(), named_subsystem("A2+A2"));
  const Json j = to_json(c, edges(c));
  CHECK(j["vertices"].size() == 108);
  CHECK(j["edges"].size() == 576);
}
