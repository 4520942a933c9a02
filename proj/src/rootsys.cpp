#include "rootforge/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {

constexpr std::size_t kMaxReportedFailures = 32;

void validate_root(Ambient a, const Multivector& r, const char* where) {
  const bool shape_ok = a == Ambient::Dim3 ? r.is_vector() : r.is_even();
  if (!shape_ok) throw ContractError(std::string(where) + ": root has the wrong grade for its ambient");
  if (inner(a, r, r) != FieldElement(1)) throw ContractError(std::string(where) + ": root is not unit norm");
}

// Lexicographic positivity: first non-zero coordinate is positive.
bool is_positive(Ambient a, const Multivector& x) {
  for (const auto& c : coordinates(a, x)) {
    const int s = sign(c);
    if (s != 0) return s > 0;
  }
  return false;
}

bool parallel(const std::vector<FieldElement>& u, const std::vector<FieldElement>& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

void record(AxiomReport& report, std::string msg) {
  if (report.failures.size() < kMaxReportedFailures) report.failures.push_back(std::move(msg));
}

CartanMatrix from_diagram(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, int>>& links) {
  CartanMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(2);
  for (const auto& [i, j, order] : links) {
    FieldElement v;
    switch (order) {
      case 3: v = FieldElement(-1); break;
      case 4: v = -FieldElement::sqrt2(); break;
      case 5: v = -FieldElement::tau(); break;
      default: throw std::logic_error("catalog: unsupported link order");
    }
    m(i, j) = v;
    m(j, i) = v;
  }
  return m;
}

std::vector<CatalogEntry> build_catalog() {
  using Links = std::vector<std::tuple<std::size_t, std::size_t, int>>;
  std::vector<CatalogEntry> c;
  auto add = [&c](std::string name, std::size_t roots, std::size_t rank, const Links& links) {
    c.push_back({std::move(name), roots, from_diagram(rank, links)});
  };
  add("A1", 2, 1, {});
  add("A1^2", 4, 2, {});
  add("A2", 6, 2, {{0, 1, 3}});
  add("I2(4)", 8, 2, {{0, 1, 4}});
  add("H2", 10, 2, {{0, 1, 5}});
  add("A1^3", 6, 3, {});
  add("A1+A2", 8, 3, {{1, 2, 3}});
  add("A1+I2(4)", 10, 3, {{1, 2, 4}});
  add("A1+H2", 12, 3, {{1, 2, 5}});
  add("A3", 12, 3, {{0, 1, 3}, {1, 2, 3}});
  add("B3", 18, 3, {{0, 1, 3}, {1, 2, 4}});
  add("H3", 30, 3, {{0, 1, 3}, {1, 2, 5}});
  add("A1^4", 8, 4, {});
  add("A2+A2", 12, 4, {{0, 1, 3}, {2, 3, 3}});
  add("I2(4)+I2(4)", 16, 4, {{0, 1, 4}, {2, 3, 4}});
  add("H2+H2", 20, 4, {{0, 1, 5}, {2, 3, 5}});
  add("A4", 20, 4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}});
  add("D4", 24, 4, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}});
  add("F4", 48, 4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
  add("H4", 120, 4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 5}});
  return c;
}

}  // namespace

std::string to_string(Ambient a) { return a == Ambient::Dim3 ? "dim3" : "dim4-spinor"; }

Ambient ambient_from_string(const std::string& s) {
  if (s == "dim3") return Ambient::Dim3;
  if (s == "dim4-spinor") return Ambient::Dim4Spinor;
  throw ContractError("unknown ambient: " + s);
}

FieldElement inner(Ambient a, const Multivector& x, const Multivector& y) {
  return a == Ambient::Dim3 ? vector_dot(x, y) : detail::spinor_inner(x, y);
}

Multivector reflect_in(Ambient a, const Multivector& r, const Multivector& x) {
  return a == Ambient::Dim3 ? detail::reflect(r, x) : detail::spin_reflect(r, x);
}

std::vector<FieldElement> coordinates(Ambient a, const Multivector& x) {
  if (a == Ambient::Dim3) return {x[kE1], x[kE2], x[kE3]};
  return {x[kScalar], x[kE12], x[kE13], x[kE23]};
}

RootSet::RootSet(const std::vector<Multivector>& items) {
  for (const auto& x : items) insert(x);
}

bool RootSet::insert(const Multivector& x) {
  const auto [it, inserted] = index_.emplace(x, items_.size());
  if (inserted) items_.push_back(x);
  return inserted;
}

std::optional<std::size_t> RootSet::find(const Multivector& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::contains(const Multivector& x) const {
  return std::find(roots.begin(), roots.end(), x) != roots.end();
}

CartanMatrix::CartanMatrix(std::size_t n, std::vector<FieldElement> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw std::invalid_argument("CartanMatrix: entry count does not match rank");
}

CartanMatrix CartanMatrix::permuted(const std::vector<std::size_t>& perm) const {
  CartanMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(perm[i], perm[j]);
  return m;
}

std::string to_string(const CartanMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rank(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.rank(); ++j) {
      const FieldElement& v = m(i, j);
      const bool has_sqrt2 = v[Radical::Sqrt2] != 0 || v[Radical::Sqrt10] != 0;
      os << (j ? ", " : "") << (has_sqrt2 ? to_string(v) : format_golden(v));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

CartanMatrix cartan_matrix(Ambient a, const std::vector<Multivector>& simple_roots) {
  if (simple_roots.empty()) throw ContractError("cartan_matrix: empty simple root list");
  const std::size_t n = simple_roots.size();
  CartanMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement norm = inner(a, simple_roots[i], simple_roots[i]);
    if (norm.is_zero()) throw ContractError("cartan_matrix: zero root");
    const FieldElement scale = FieldElement(2) / norm;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * inner(a, simple_roots[i], simple_roots[j]);
  }
  return m;
}

RootSystem close_under_reflections(Ambient a, const std::vector<Multivector>& simple_roots, std::size_t cap) {
  RootSet set;
  for (const auto& r : simple_roots) {
    validate_root(a, r, "close_under_reflections");
    set.insert(r);
    set.insert(-r);
  }
  auto check_cap = [&set, cap] {
    if (set.size() > cap)
      throw CapExceeded("close_under_reflections: more than " + std::to_string(cap) + " roots");
  };
  check_cap();
  // Each ordered pair (k, j) is reflected exactly once: pairs are visited
  // when their larger index is reached.
  for (std::size_t k = 0; k < set.size(); ++k) {
    const Multivector rk = set[k];
    for (std::size_t j = 0; j <= k; ++j) {
      const Multivector rj = set[j];
      set.insert(reflect_in(a, rk, rj));
      if (j != k) set.insert(reflect_in(a, rj, rk));
      check_cap();
    }
  }
  return RootSystem{a, set.items(), simple_roots};
}

AxiomReport verify_axioms(const RootSystem& rs) {
  AxiomReport report;
  const RootSet set(rs.roots);
  const auto& roots = rs.roots;

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const bool shape_ok = rs.ambient == Ambient::Dim3 ? roots[i].is_vector() : roots[i].is_even();
    if (!shape_ok || inner(rs.ambient, roots[i], roots[i]) != FieldElement(1)) {
      report.unit_norm = false;
      record(report, "root " + std::to_string(i) + " is not a unit root of the ambient");
    }
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!set.contains(-roots[i])) {
      report.axiom1 = false;
      record(report, "negative of root " + std::to_string(i) + " is missing");
    }
  }
  // With unit norms the only parallel roots are +-alpha; otherwise check
  // every pair for other scalar multiples.
  if (!report.unit_norm) {
    std::vector<std::vector<FieldElement>> coords;
    coords.reserve(roots.size());
    for (const auto& r : roots) coords.push_back(coordinates(rs.ambient, r));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (parallel(coords[i], coords[j]) && roots[j] != roots[i] && roots[j] != -roots[i]) {
          report.axiom1 = false;
          record(report, "roots " + std::to_string(i) + " and " + std::to_string(j) +
                             " are parallel but not +-equal");
        }
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (!set.contains(reflect_in(rs.ambient, roots[i], roots[j]))) {
        report.axiom2 = false;
        record(report, "reflection of root " + std::to_string(j) + " in root " + std::to_string(i) +
                           " leaves the set");
      }
    }
  }
  return report;
}

std::vector<Multivector> select_simple_roots(const RootSystem& rs) {
  std::vector<Multivector> positive;
  for (const auto& r : rs.roots)
    if (is_positive(rs.ambient, r)) positive.push_back(r);

  std::vector<Multivector> simple;
  for (const auto& alpha : positive) {
    bool permutes = true;
    for (const auto& beta : positive) {
      if (beta == alpha) continue;
      if (!is_positive(rs.ambient, reflect_in(rs.ambient, alpha, beta))) {
        permutes = false;
        break;
      }
    }
    if (permutes) simple.push_back(alpha);
  }
  return simple;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> kCatalog = build_catalog();
  return kCatalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::invalid_argument("no catalog entry named " + name);
}

Identification identify_unchecked(const RootSystem& rs) {
  Identification id{"unknown", {}, {}};
  if (rs.roots.empty()) return id;
  std::vector<Multivector> simple = select_simple_roots(rs);
  if (simple.empty()) return id;
  const CartanMatrix a = cartan_matrix(rs.ambient, simple);
  id.simple_roots = simple;
  id.cartan = a;

  std::vector<std::size_t> perm(simple.size());
  for (const auto& entry : catalog()) {
    if (entry.root_count != rs.roots.size() || entry.cartan.rank() != simple.size()) continue;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      if (a.permuted(perm) == entry.cartan) {
        id.name = entry.name;
        id.simple_roots.clear();
        for (std::size_t i : perm) id.simple_roots.push_back(simple[i]);
        id.cartan = entry.cartan;
        return id;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return id;
}

Identification identify(const RootSystem& rs) {
  if (!verify_axioms(rs).ok()) return Identification{"unknown", {}, {}};
  return identify_unchecked(rs);
}

}  // namespace rootforge
