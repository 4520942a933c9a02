#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "rootforge/coxplane.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/induction.hpp"
#include "rootforge/splitting.hpp"

using namespace rootforge;

namespace {

const FieldElement tau = FieldElement::tau();
const FieldElement sigma = FieldElement::sigma();
const FieldElement half = FieldElement::fraction(1, 2);

const CartanMatrix& h4_cartan() {
  static const CartanMatrix c = cartan_matrix(Ambient::Dim4Spinor, h4_coxeter_simple_roots());
  return c;
}

// Printed eigenvalue and eigenvector, evaluated directly in long double.
long double printed_lambda() {
  const long double r5 = std::sqrt(5.0L);
  return 2.0L - 0.5L * std::sqrt(7.0L + r5 + std::sqrt(6.0L * r5 + 30.0L));
}

std::array<long double, 4> printed_vector() {
  const long double r5 = std::sqrt(5.0L);
  const long double q = std::sqrt(6.0L * r5 + 30.0L);
  const long double p = std::sqrt(r5 + q + 7.0L);
  return {4 + 4 * r5, 2 * (1 + r5) * p, q + 8 + 4 * r5 + r5 * q, (-1 + r5 + q) * p};
}

bool near_member(const Point2& p, const std::vector<Point2>& set, double tol) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Point2& q) { return std::hypot(p[0] - q[0], p[1] - q[1]) <= tol; });
}

bool same_multiset(std::vector<Point2> a, std::vector<Point2> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find_if(b.begin(), b.end(),
                           [&](const Point2& q) { return std::hypot(p[0] - q[0], p[1] - q[1]) <= tol; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

double dot4(const Point4& a, const Point4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("printed H4 simple roots") {
  const auto a = h4_coxeter_simple_roots();
  REQUIRE(a.size() == 4);
  CHECK(a[0] == Multivector(FieldElement(1)));
  CHECK(a[1] == Multivector::even(-half, tau * half, 0, sigma * half));
  CHECK(a[2] == Multivector::even(0, sigma * half, -half, tau * half));
  CHECK(a[3] == Multivector::even(0, sigma * half, half, -tau * half));
}

TEST_CASE("bipartition") {
  const Bipartition h4 = bipartition(h4_cartan());
  CHECK(h4.black == std::vector<std::size_t>{0, 2});
  CHECK(h4.white == std::vector<std::size_t>{1, 3});
  const Bipartition a14 = bipartition(CartanMatrix(4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}));
  CHECK(a14.black == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(a14.white.empty());
  const Bipartition h3 = bipartition(cartan_matrix(Ambient::Dim3, systems::h3_simple_roots()));
  CHECK(h3.black == std::vector<std::size_t>{0, 2});
  CHECK(h3.white == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(bipartition(CartanMatrix(3, {2, -1, -1, -1, 2, -1, -1, -1, 2})), ContractError);
}

TEST_CASE("fundamental weights") {
  const auto a = h4_coxeter_simple_roots();
  const auto w = fundamental_weights(a);
  REQUIRE(w.size() == 4);
  const FieldElement one(1);
  CHECK(w[0] == Multivector::even(1, 0, -(tau + one), -tau));
  CHECK(w[1] == Multivector::even(0, 0, -FieldElement(2) * (tau + one), -FieldElement(2) * tau));
  CHECK(w[2] == Multivector::even(0, -tau, -FieldElement(3) * (tau + one), -(FieldElement(2) * tau + one)));
  CHECK(w[3] == Multivector::even(0, -tau, -(FieldElement(3) * tau + one), -(FieldElement(2) * tau + one)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(inner(Ambient::Dim4Spinor, w[i], a[j]) == FieldElement(i == j ? 1 : 0));

  const auto a14 = named_simple_roots("A1^4");
  CHECK(fundamental_weights(a14) == a14);
  CHECK_THROWS_AS(fundamental_weights({a[0], a[1], a[0], a[3]}), ContractError);
}

TEST_CASE("Perron-Frobenius data") {
  const PerronFrobenius pf = perron_frobenius(h4_cartan());
  CHECK(std::abs(pf.eigenvalue - static_cast<double>(printed_lambda())) <= 1e-10);
  CHECK(std::abs(pf.eigenvalue - (2 - 2 * std::cos(std::numbers::pi / 30))) <= 1e-10);
  CHECK(pf.residual <= 1e-10);
  REQUIRE(pf.eigenvector.size() == 4);
  for (double x : pf.eigenvector) CHECK(x > 0);
  const auto v = printed_vector();
  long double dot = 0, nv = 0, nu = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    dot += v[i] * pf.eigenvector[i];
    nv += v[i] * v[i];
    nu += static_cast<long double>(pf.eigenvector[i]) * pf.eigenvector[i];
  }
  CHECK(static_cast<double>(dot / std::sqrt(nv * nu)) > 1 - 1e-10);
  CHECK(std::abs(static_cast<double>(nu) - 1) <= 1e-12);

  const PerronFrobenius flat = perron_frobenius(CartanMatrix(4, {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}));
  CHECK(flat.eigenvalue == doctest::Approx(2.0));
  for (double x : flat.eigenvector) CHECK(x > 0);

  // Printed eigenvector is an eigenvector of A for the printed eigenvalue.
  for (std::size_t i = 0; i < 4; ++i) {
    long double row = 0;
    for (std::size_t j = 0; j < 4; ++j) row += static_cast<long double>(to_float(h4_cartan()(i, j))) * v[j];
    CHECK(std::abs(static_cast<double>(row - printed_lambda() * v[i])) <= 1e-9 * std::sqrt(static_cast<double>(nv)));
  }
}

TEST_CASE("projection plane") {
  const ProjectionPlane plane = h4_coxeter_plane();
  CHECK(std::abs(dot4(plane.black_vec, plane.white_vec)) <= 1e-12);
  CHECK(std::abs(dot4(plane.black_vec, plane.black_vec) - 1) <= 1e-12);
  CHECK(std::abs(dot4(plane.white_vec, plane.white_vec) - 1) <= 1e-12);

  const auto a = h4_coxeter_simple_roots();
  const PerronFrobenius pf = perron_frobenius(h4_cartan());
  const Bipartition b = bipartition(h4_cartan());
  const ProjectionPlane swapped = build_plane(a, Bipartition{b.white, b.black}, pf);
  for (const auto& u : {swapped.black_vec, swapped.white_vec}) {
    const double x = dot4(u, plane.black_vec), y = dot4(u, plane.white_vec);
    CHECK(std::abs(x * x + y * y - 1) <= 1e-12);
  }
  // B and W meet at pi/30, so the swapped frame is a rotation of the old one, not an exchange of axes.
  CHECK(std::abs(dot4(swapped.black_vec, plane.black_vec) - std::cos(std::numbers::pi / 30)) <= 1e-12);
  CHECK_THROWS_AS(build_plane(a, Bipartition{{0, 1, 2, 3}, {}}, pf), ContractError);
}

TEST_CASE("projected 600-cell") {
  const ProjectionPlane plane = h4_coxeter_plane();
  const RootSystem h4 = h4_root_system();
  const auto pts = project(plane, h4.roots);
  REQUIRE(pts.size() == 120);

  const double t = 2 * std::numbers::pi / 30;
  for (const auto& p : pts) {
    const Point2 r{p[0] * std::cos(t) - p[1] * std::sin(t), p[0] * std::sin(t) + p[1] * std::cos(t)};
    CHECK(near_member(r, pts, 1e-9));
  }

  // Independent ring count: the Coxeter element (product of the four
  // reflections) rotates the plane by 2pi/30, so each of its orbits on the
  // roots lies on one circle. Count those orbits exactly.
  const auto a = h4_coxeter_simple_roots();
  auto coxeter = [&](const Multivector& v) {
    Multivector x = v;
    for (const auto& r : a) x = reflect_in(Ambient::Dim4Spinor, r, x);
    return x;
  };
  std::set<std::size_t> seen;
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < h4.size(); ++i) {
    if (seen.count(i)) continue;
    ++orbits;
    Multivector x = h4.roots[i];
    std::size_t len = 0;
    do {
      seen.insert(static_cast<std::size_t>(std::find(h4.roots.begin(), h4.roots.end(), x) - h4.roots.begin()));
      x = coxeter(x);
      ++len;
    } while (!(x == h4.roots[i]));
    CHECK(len == 30);
  }
  CHECK(orbits == 4);
  CHECK(distinct_radii(pts).size() == orbits);

  CHECK(project(plane, {Multivector()}) == std::vector<Point2>{{0.0, 0.0}});
}

TEST_CASE("projection respects invariant subsets") {
  const ProjectionPlane plane = h4_coxeter_plane();
  const RootSystem h4 = h4_root_system();
  for (const std::string label : {"H2+H2", "D4", "A4"}) {
    CAPTURE(label);
    const RootSystem sub = named_subsystem(label);
    const auto [s, c] = split(h4, sub);
    const auto base = project(plane, c.vertices);
    for (const auto& r : sub.roots) {
      std::vector<Multivector> image;
      for (const auto& v : c.vertices) image.push_back(reflect_in(Ambient::Dim4Spinor, r, v));
      CHECK(same_multiset(base, project(plane, image), 1e-9));
    }
  }
}

TEST_CASE("subsystems project onto the 600-cell rings") {
  const ProjectionPlane plane = h4_coxeter_plane();
  const auto rings = distinct_radii(project(plane, h4_root_system().roots));
  for (const std::string label : {"H2+H2", "D4", "A1^4", "A2+A2", "A4"}) {
    CAPTURE(label);
    for (double r : distinct_radii(project(plane, named_subsystem(label).roots)))
      CHECK(std::any_of(rings.begin(), rings.end(), [r](double x) { return std::abs(x - r) <= 1e-9; }));
  }
}

TEST_CASE("svg and csv") {
  const RootSystem h4 = h4_root_system();
  const auto pts = project(h4_coxeter_plane(), h4.roots);
  const EdgeSet es = edges(VertexSet{h4.roots, "600-cell"});
  const std::string svg = render_svg(pts, es.edges, "600-cell");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"-1.050000 -1.050000 2.100000 2.100000\"") != std::string::npos);
  CHECK(count_of(svg, "<circle") == 120);
  CHECK(count_of(svg, "<line") == 720);
  const std::string csv = render_csv(pts);
  CHECK(csv.rfind("x,y\n", 0) == 0);
  CHECK(count_of(csv, "\n") == 121);
  CHECK_THROWS(render_svg(pts, {{0, 500}}, "bad"));
}
