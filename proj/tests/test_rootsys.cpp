#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "rootforge/coxplane.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/induction.hpp"
#include "rootforge/io.hpp"
#include "rootforge/rootsys.hpp"

using namespace rootforge;

namespace {

const FieldElement tau = FieldElement::tau();

CartanMatrix matrix(std::size_t n, std::vector<FieldElement> entries) { return CartanMatrix(n, std::move(entries)); }

Multivector e(Blade b) { return Multivector::blade(b); }

}  // namespace

TEST_CASE("Cartan matrices of printed simple roots") {
  CHECK(cartan_matrix(Ambient::Dim3, systems::h3_simple_roots()) ==
        matrix(3, {2, -1, 0, -1, 2, -tau, 0, -tau, 2}));
  CHECK(cartan_matrix(Ambient::Dim4Spinor, h4_coxeter_simple_roots()) ==
        matrix(4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -tau, 0, 0, -tau, 2}));
  CHECK(cartan_matrix(Ambient::Dim3, {e(kE1), e(kE2)}) == matrix(2, {2, 0, 0, 2}));
  CHECK_THROWS_AS(cartan_matrix(Ambient::Dim3, {}), ContractError);
}

TEST_CASE("closure under reflections") {
  CHECK(close_under_reflections(Ambient::Dim3, systems::h3_simple_roots()).size() == 30);
  const RootSystem a1 = close_under_reflections(Ambient::Dim3, {e(kE1)});
  CHECK(a1.size() == 2);
  CHECK(a1.contains(e(kE1)));
  CHECK(a1.contains(-e(kE1)));
  CHECK(close_under_reflections(Ambient::Dim4Spinor, h4_coxeter_simple_roots()).size() == 120);
  CHECK(close_under_reflections(Ambient::Dim3, systems::b3_simple_roots()).size() == 18);
  CHECK(close_under_reflections(Ambient::Dim3, systems::a3_simple_roots()).size() == 12);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(close_under_reflections(Ambient::Dim4Spinor, h4_coxeter_simple_roots(), 100), CapExceeded);
  CHECK_THROWS_AS(close_under_reflections(Ambient::Dim3, {Multivector::vector(1, 1, 0)}), ContractError);
  CHECK_THROWS_AS(close_under_reflections(Ambient::Dim3, {e(kE12)}), ContractError);
  CHECK_THROWS_AS(close_under_reflections(Ambient::Dim4Spinor, {e(kE1)}), ContractError);
}

TEST_CASE("closure is idempotent and has even size") {
  for (const auto& simple : {systems::h3_simple_roots(), systems::a3_simple_roots(), systems::b3_simple_roots(),
                             systems::a1_cubed_simple_roots()}) {
    const RootSystem rs = close_under_reflections(Ambient::Dim3, simple);
    CHECK(rs.size() % 2 == 0);
    const RootSystem again = close_under_reflections(Ambient::Dim3, rs.roots);
    CHECK(again.size() == rs.size());
    for (const auto& r : again.roots) CHECK(rs.contains(r));
  }
}

TEST_CASE("axiom checks") {
  const RootSystem h4 = h4_root_system();
  CHECK(verify_axioms(h4).ok());

  RootSystem lone{Ambient::Dim3, {e(kE1)}, {}};
  const AxiomReport r1 = verify_axioms(lone);
  CHECK_FALSE(r1.axiom1);
  CHECK_FALSE(r1.failures.empty());

  RootSystem three{Ambient::Dim3, {e(kE1), -e(kE1), e(kE2)}, {}};
  const AxiomReport r2 = verify_axioms(three);
  CHECK_FALSE(r2.axiom1);
  CHECK_FALSE(r2.axiom2);

  RootSystem scaled{Ambient::Dim3, {e(kE1), -e(kE1), Multivector::vector(2, 0, 0), Multivector::vector(-2, 0, 0)}, {}};
  const AxiomReport r3 = verify_axioms(scaled);
  CHECK_FALSE(r3.unit_norm);
  CHECK_FALSE(r3.axiom1);
}

TEST_CASE("identification") {
  const Identification a2a2 = identify(named_subsystem("A2+A2"));
  CHECK(a2a2.name == "A2+A2");
  CHECK(a2a2.cartan == matrix(4, {2, -1, 0, 0, -1, 2, 0, 0, 0, 0, 2, -1, 0, 0, -1, 2}));
  const Identification h2h2 = identify(named_subsystem("H2+H2"));
  CHECK(h2h2.name == "H2+H2");
  CHECK(h2h2.cartan == matrix(4, {2, -tau, 0, 0, -tau, 2, 0, 0, 0, 0, 2, -tau, 0, 0, -tau, 2}));
  CHECK(identify(named_subsystem("D4")).name == "D4");
  CHECK(identify(named_subsystem("A4")).name == "A4");
  CHECK(identify(h4_root_system()).name == "H4");
  CHECK(identify(close_under_reflections(Ambient::Dim3, systems::h3_simple_roots())).name == "H3");
  CHECK(identify(close_under_reflections(Ambient::Dim3, systems::b3_simple_roots())).name == "B3");
  CHECK(identify(close_under_reflections(Ambient::Dim3, {e(kE1)})).name == "A1");
  RootSystem broken{Ambient::Dim3, {e(kE1)}, {}};
  CHECK(identify(broken).name == "unknown");
}

TEST_CASE("selected simple roots reproduce the system") {
  for (const std::string label : {"D4", "A4", "A2+A2", "H2+H2", "A1^4"}) {
    const RootSystem rs = named_subsystem(label);
    const auto simple = select_simple_roots(rs);
    CHECK(simple.size() == 4);
    CHECK(close_under_reflections(Ambient::Dim4Spinor, simple).size() == rs.size());
  }
}

TEST_CASE("pairwise Cartan entries of closed systems stay in the expected set") {
  const FieldElement s2 = FieldElement::sqrt2();
  const std::vector<FieldElement> allowed{0, 1, -1, 2, -2, tau, -tau, FieldElement::sigma(), -FieldElement::sigma(),
                                          s2, -s2};
  for (const auto& rs : {close_under_reflections(Ambient::Dim3, systems::h3_simple_roots()),
                         close_under_reflections(Ambient::Dim3, systems::b3_simple_roots()), h4_root_system()}) {
    for (const auto& x : rs.roots) {
      for (const auto& y : rs.roots) {
        const FieldElement a = FieldElement(2) * inner(rs.ambient, x, y);
        bool found = false;
        for (const auto& v : allowed) found = found || v == a;
        REQUIRE(found);
      }
    }
  }
}

TEST_CASE("catalog") {
  CHECK(catalog_entry("H4").root_count == 120);
  CHECK(catalog_entry("F4").root_count == 48);
  CHECK(catalog_entry("D4").cartan.rank() == 4);
  CHECK_THROWS(catalog_entry("E8"));
}

TEST_CASE("json and csv export") {
  const RootSystem rs = named_subsystem("H2+H2");
  const Json j = to_json(rs);
  CHECK(j["ambient"] == "dim4-spinor");
  CHECK(j["roots"].size() == 20);
  CHECK(j["roots"][0].size() == 8);
  const RootSystem back = root_system_from_json(Json::parse(j.dump()));
  CHECK(back.roots == rs.roots);
  CHECK(back.simple_roots == rs.simple_roots);
  CHECK(verify_axioms(back).ok());
  const std::string csv = root_system_csv(rs);
  CHECK(csv.rfind("x1,x2,x3,x4\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  CHECK_THROWS_AS(root_system_from_json(Json::parse("{\"roots\": []}")), ContractError);
  CHECK_THROWS_AS(ambient_from_string("dim5"), ContractError);
}
