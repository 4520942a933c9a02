#include "rootforge/groups.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {

void require_unit_vectors(const std::vector<Multivector>& roots, const char* where) {
  for (const auto& r : roots) {
    if (!r.is_vector() || vector_dot(r, r) != FieldElement(1))
      throw ContractError(std::string(where) + ": generators must be unit vectors");
  }
}

struct Step {
  Multivector value;
  Word word;
};

VersorGroup close(std::vector<Multivector> roots, Parity parity, const std::vector<Step>& steps,
                  std::size_t cap, const char* where) {
  VersorGroup group(std::move(roots), parity);
  group.add(GroupElement{Multivector(FieldElement(1)), {}, 0, false});
  for (std::size_t k = 0; k < group.order(); ++k) {
    const GroupElement current = group.elements()[k];
    for (const auto& step : steps) {
      Word w = current.word;
      w.insert(w.end(), step.word.begin(), step.word.end());
      group.add(GroupElement{current.value * step.value, std::move(w), group.order(), current.negated});
      if (group.order() > cap)
        throw CapExceeded(std::string(where) + ": more than " + std::to_string(cap) + " elements");
    }
  }
  if (!group.contains(Multivector(FieldElement(-1)))) {
    const std::size_t n = group.order();
    if (2 * n > cap) throw CapExceeded(std::string(where) + ": more than " + std::to_string(cap) + " elements");
    for (std::size_t k = 0; k < n; ++k) {
      const GroupElement& e = group.elements()[k];
      group.add(GroupElement{-e.value, e.word, group.order(), !e.negated});
    }
  }
  return group;
}

}  // namespace

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i : w) s += std::to_string(i + 1);
  return s;
}

std::string path_string(const GroupElement& e) {
  return (e.negated ? "-" : "") + word_to_string(e.word);
}

Word parse_word(const std::string& digits) {
  Word w;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("parse_word: expected digits 1-9");
    w.push_back(static_cast<std::size_t>(ch - '1'));
  }
  return w;
}

VersorGroup::VersorGroup(std::vector<Multivector> generators, Parity parity)
    : generators_(std::move(generators)), parity_(parity) {}

std::optional<std::size_t> VersorGroup::find(const Multivector& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GroupElement& VersorGroup::at(const Multivector& x) const {
  const auto pos = find(x);
  if (!pos) throw std::out_of_range("VersorGroup::at: element not in group");
  return elements_[*pos];
}

bool VersorGroup::add(GroupElement e) {
  const auto [it, inserted] = index_.emplace(e.value, elements_.size());
  if (inserted) elements_.push_back(std::move(e));
  return inserted;
}

VersorGroup generate_pin(const std::vector<Multivector>& roots, std::size_t cap) {
  require_unit_vectors(roots, "generate_pin");
  std::vector<Step> steps;
  for (std::size_t i = 0; i < roots.size(); ++i) steps.push_back({roots[i], {i}});
  return close(roots, Parity::Full, steps, cap, "generate_pin");
}

VersorGroup generate_spin(const std::vector<Multivector>& roots, std::size_t cap) {
  require_unit_vectors(roots, "generate_spin");
  std::vector<Step> steps;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) steps.push_back({roots[i] * roots[j], {i, j}});
  return close(roots, Parity::EvenOnly, steps, cap, "generate_spin");
}

std::size_t element_order(const Multivector& g, std::size_t limit) {
  const Multivector one(FieldElement(1));
  Multivector power = g;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (power == one) return k;
    power = power * g;
  }
  throw ContractError("element_order: element has no finite order within the step limit");
}

std::size_t element_order(const GroupElement& g) { return element_order(g.value); }

std::vector<ConjugacyClass> conjugacy_classes(const VersorGroup& g) {
  const auto& elems = g.elements();
  std::vector<bool> assigned(elems.size(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass cls;
    cls.element_order = element_order(elems[i].value);
    for (const auto& h : elems) {
      // Unit versors: the inverse of h is its reverse.
      const Multivector conj = h.value * elems[i].value * reverse(h.value);
      const auto pos = g.find(conj);
      if (!pos) throw std::logic_error("conjugacy_classes: group is not closed under conjugation");
      if (!assigned[*pos]) {
        assigned[*pos] = true;
        cls.members.push_back(*pos);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [&elems](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::make_tuple(a.element_order, a.members.size(), elems[a.members.front()].seq) <
           std::make_tuple(b.element_order, b.members.size(), elems[b.members.front()].seq);
  });
  return classes;
}

bool contains_inversion(const VersorGroup& g) {
  const Multivector i = Multivector::pseudoscalar();
  return g.contains(i) || g.contains(-i);
}

VersorGroup subgroup_generated(const VersorGroup& g, const std::vector<Multivector>& seeds) {
  for (const auto& s : seeds)
    if (!g.contains(s)) throw ContractError("subgroup_generated: seed is not an element of the group");
  VersorGroup sub(g.generators(), g.parity());
  sub.add(g.at(Multivector(FieldElement(1))));
  for (std::size_t k = 0; k < sub.order(); ++k) {
    const Multivector current = sub.elements()[k].value;
    for (const auto& s : seeds) {
      const auto pos = g.find(current * s);
      if (!pos) throw std::logic_error("subgroup_generated: parent group is not closed");
      sub.add(g.elements()[*pos]);
    }
  }
  return sub;
}

Multivector evaluate_word(const std::vector<Multivector>& generators, const Word& word) {
  Multivector r(FieldElement(1));
  for (std::size_t i : word) {
    if (i >= generators.size()) throw std::out_of_range("evaluate_word: generator index out of range");
    r = r * generators[i];
  }
  return r;
}

}  // namespace rootforge
