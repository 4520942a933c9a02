#pragma once

// Finite versor groups in Cl(3): Pin/Spin covers generated by unit root
// vectors, element orders, generator words and conjugacy classes.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootforge/clifford.hpp"

namespace rootforge {

inline constexpr std::size_t kDefaultGroupCap = 16384;

/// A word is a sequence of 0-based indices into the group's generator list.
using Word = std::vector<std::size_t>;

/// Word rendered with 1-based digits, e.g. {0, 1} -> "12".
std::string word_to_string(const Word& w);

/// value = (negated ? -1 : 1) * evaluate_word(generators, word). The sign
/// flag is only set when -1 is not itself a product of the generators and
/// had to be adjoined (every versor group contains -1).
struct GroupElement {
  Multivector value;
  Word word;          // first word that reached this element
  std::size_t seq{};  // discovery index (0 is the identity)
  bool negated = false;
};

/// Generator path as printed in tables: "12", or "-12" for negated elements.
std::string path_string(const GroupElement& e);

enum class Parity { EvenOnly, Full };

class VersorGroup {
public:
  VersorGroup(std::vector<Multivector> generators, Parity parity);

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<Multivector>& generators() const { return generators_; }
  Parity parity() const { return parity_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Multivector& x) const { return index_.count(x) != 0; }
  /// Position of x in elements(), if present.
  std::optional<std::size_t> find(const Multivector& x) const;
  const GroupElement& at(const Multivector& x) const;

  /// Appends a new element; returns false if already present.
  bool add(GroupElement e);

private:
  std::vector<Multivector> generators_;
  Parity parity_;
  std::vector<GroupElement> elements_;
  std::unordered_map<Multivector, std::size_t, MultivectorHash> index_;
};

/// Breadth-first closure from 1 by right multiplication with each root, in
/// generator order. If -1 was not reached, the coset -G is appended.
VersorGroup generate_pin(const std::vector<Multivector>& roots, std::size_t cap = kDefaultGroupCap);

/// Even closure: steps are the products root_i root_j (i < j). Words are
/// recorded over the roots themselves, so they have even length.
VersorGroup generate_spin(const std::vector<Multivector>& roots, std::size_t cap = kDefaultGroupCap);

/// Least k >= 1 with g^k = 1. Throws ContractError if none is found
/// within `limit` steps.
std::size_t element_order(const Multivector& g, std::size_t limit = 100000);
std::size_t element_order(const GroupElement& g);

struct ConjugacyClass {
  std::size_t element_order{};
  std::vector<std::size_t> members;  // positions in VersorGroup::elements(), ascending
};

/// Orbits of g -> h g ~h, sorted by (element order, size, smallest discovery index).
std::vector<ConjugacyClass> conjugacy_classes(const VersorGroup& g);

bool contains_inversion(const VersorGroup& g);

/// Closure of the seeds under the geometric product inside g. Elements keep
/// the words they have in g. Throws ContractError if a seed is not in g.
VersorGroup subgroup_generated(const VersorGroup& g, const std::vector<Multivector>& seeds);

/// Left-to-right product of the indexed generators. The empty word is 1.
Multivector evaluate_word(const std::vector<Multivector>& generators, const Word& word);

/// Parses "123" into {0, 1, 2}.
Word parse_word(const std::string& digits);

}  // namespace rootforge
