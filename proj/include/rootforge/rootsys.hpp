#pragma once

// Root systems as exact vector sets.
//
// A root system lives either in 3D (grade-1 multivectors, Euclidean dot
// product, s_a(x) = -a x a) or in the 4D space of Cl(3) spinors (spinor
// inner product, R2 -> -R1 ~R2 R1). Roots are stored as Multivectors in both
// cases; the ambient selects the inner product and reflection.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootforge/clifford.hpp"
#include "rootforge/field.hpp"

namespace rootforge {

enum class Ambient { Dim3, Dim4Spinor };

std::string to_string(Ambient a);
Ambient ambient_from_string(const std::string& s);

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Inner product of the ambient space.
FieldElement inner(Ambient a, const Multivector& x, const Multivector& y);

/// Reflection of x in the hyperplane normal to the unit root r (no checks).
Multivector reflect_in(Ambient a, const Multivector& r, const Multivector& x);

/// Coordinates in the ambient Euclidean space (3 or 4 entries). Spinors use
/// the spinor_to_vector4 map.
std::vector<FieldElement> coordinates(Ambient a, const Multivector& x);

/// Insertion-ordered set of multivectors with exact membership.
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(const std::vector<Multivector>& items);

  /// Returns true when x was not yet present.
  bool insert(const Multivector& x);
  bool contains(const Multivector& x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> find(const Multivector& x) const;

  std::size_t size() const { return items_.size(); }
  const Multivector& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Multivector>& items() const { return items_; }

private:
  std::vector<Multivector> items_;
  std::unordered_map<Multivector, std::size_t, MultivectorHash> index_;
};

struct RootSystem {
  Ambient ambient = Ambient::Dim3;
  std::vector<Multivector> roots;
  std::vector<Multivector> simple_roots;  // possibly empty

  std::size_t size() const { return roots.size(); }
  bool contains(const Multivector& x) const;
};

class CartanMatrix {
public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  CartanMatrix(std::size_t n, std::vector<FieldElement> entries);

  std::size_t rank() const { return n_; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// Matrix with rows and columns reindexed: result(i, j) = this(perm[i], perm[j]).
  CartanMatrix permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<FieldElement> entries_;
};

std::string to_string(const CartanMatrix& m);

/// A_ij = 2 (a_i, a_j) / (a_i, a_i). Throws ContractError on an empty list.
CartanMatrix cartan_matrix(Ambient a, const std::vector<Multivector>& simple_roots);

/// Smallest reflection-closed set containing +-simple_roots. Throws
/// CapExceeded when more than `cap` roots appear, ContractError on non-unit
/// or wrong-grade input.
RootSystem close_under_reflections(Ambient a, const std::vector<Multivector>& simple_roots,
                                   std::size_t cap = kDefaultClosureCap);

struct AxiomReport {
  bool unit_norm = true;
  bool axiom1 = true;  // only +-alpha among multiples of alpha
  bool axiom2 = true;  // closed under reflection in every root
  std::vector<std::string> failures;

  bool ok() const { return unit_norm && axiom1 && axiom2; }
};

AxiomReport verify_axioms(const RootSystem& rs);

struct Identification {
  std::string name;  // catalog label, or "unknown"
  std::vector<Multivector> simple_roots;  // ordered to match the catalog matrix
  CartanMatrix cartan;
};

/// Simple roots relative to the lexicographic order of coordinates: the
/// positive roots whose reflection permutes the other positive roots.
std::vector<Multivector> select_simple_roots(const RootSystem& rs);

/// Matches root count and Cartan matrix (up to reordering of the simple
/// roots) against the catalog. Systems failing verify_axioms are "unknown".
Identification identify(const RootSystem& rs);

/// Same as identify() without re-running verify_axioms.
Identification identify_unchecked(const RootSystem& rs);

struct CatalogEntry {
  std::string name;
  std::size_t root_count;
  CartanMatrix cartan;
};

/// Catalog of rank <= 4 systems expressible over Q(sqrt2, sqrt5).
const std::vector<CatalogEntry>& catalog();

const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace rootforge
