#include "rootforge/induction.hpp"

#include <stdexcept>

#include "rootforge/errors.hpp"

namespace rootforge {

namespace systems {

namespace {

FieldElement half() { return FieldElement::fraction(1, 2); }
FieldElement inv_sqrt2() { return FieldElement::sqrt2() * half(); }

}  // namespace

std::vector<Multivector> h3_simple_roots() {
  const FieldElement t = FieldElement::tau();
  return {Multivector::vector(0, 1, 0),
          Multivector::vector(-t * half(), -half(), -(t - FieldElement(1)) * half()),
          Multivector::vector(1, 0, 0)};
}

std::vector<Multivector> a3_simple_roots() {
  const FieldElement h = inv_sqrt2();
  return {Multivector::vector(h, -h, 0), Multivector::vector(0, h, -h), Multivector::vector(0, h, h)};
}

std::vector<Multivector> b3_simple_roots() {
  const FieldElement h = inv_sqrt2();
  return {Multivector::vector(h, -h, 0), Multivector::vector(0, h, -h), Multivector::vector(0, 0, 1)};
}

std::vector<Multivector> a1_cubed_simple_roots() {
  return {Multivector::vector(1, 0, 0), Multivector::vector(0, 1, 0), Multivector::vector(0, 0, 1)};
}

std::vector<Multivector> i2_simple_roots(int n) {
  const auto h3 = h3_simple_roots();
  switch (n) {
    case 2: return {Multivector::vector(1, 0, 0), Multivector::vector(0, 1, 0)};
    case 3: return {h3[0], h3[1]};
    case 4: return {Multivector::vector(1, 0, 0), Multivector::vector(-inv_sqrt2(), inv_sqrt2(), 0)};
    case 5: return {h3[1], h3[2]};
    default:
      throw ContractError("I2(" + std::to_string(n) +
                          "): only n in {2, 3, 4, 5} have cos(pi/n) in Q(sqrt2, sqrt5)");
  }
}

std::vector<Multivector> a1_plus_i2_simple_roots(int n) {
  if (n != 2 && n != 4) {
    throw ContractError("A1+I2(" + std::to_string(n) +
                        "): the orthogonal A1 root needs sin(pi/n), which is not in Q(sqrt2, sqrt5); "
                        "use the doubling of I2(n) instead");
  }
  auto roots = i2_simple_roots(n);
  roots.push_back(Multivector::vector(0, 0, 1));
  return roots;
}

FieldElement i2_simple_root_cosine(int n) {
  switch (n) {
    case 2: return FieldElement(0);
    case 3: return -half();
    case 4: return -inv_sqrt2();
    case 5: return -FieldElement::tau() * half();
    default:
      throw ContractError("I2(" + std::to_string(n) +
                          "): only n in {2, 3, 4, 5} have cos(pi/n) in Q(sqrt2, sqrt5)");
  }
}

}  // namespace systems

namespace {

std::vector<Multivector> spinor_values(const VersorGroup& g) {
  std::vector<Multivector> out;
  out.reserve(g.order());
  for (const auto& e : g.elements()) out.push_back(e.value);
  return out;
}

RootSystem as_spinor_system(const VersorGroup& g) {
  RootSystem rs;
  rs.ambient = Ambient::Dim4Spinor;
  rs.roots = spinor_values(g);
  return rs;
}

void require_unit_vector(const Multivector& a, const char* where) {
  if (!a.is_vector() || vector_dot(a, a) != FieldElement(1))
    throw ContractError(std::string(where) + ": expected a unit grade-1 root");
}

Multivector word_product(const std::vector<Multivector>& gens, const std::string& digits) {
  return evaluate_word(gens, parse_word(digits));
}

}  // namespace

InductionResult induce(const RootSystem& rs3, std::size_t cap) {
  if (rs3.ambient != Ambient::Dim3) throw ContractError("induce: source must be a 3D root system");
  if (rs3.roots.empty() && rs3.simple_roots.empty()) throw ContractError("induce: empty root system");
  // Even products of all roots equal those of the simple roots up to -1,
  // which generate_spin adjoins anyway.
  const auto& gens = rs3.simple_roots.empty() ? rs3.roots : rs3.simple_roots;
  VersorGroup g = generate_spin(gens, cap);
  RootSystem induced = as_spinor_system(g);
  const AxiomReport report = verify_axioms(induced);
  if (!report.ok()) throw std::logic_error("induce: induced set fails the root system axioms");
  Identification id = identify_unchecked(induced);
  induced.simple_roots = id.simple_roots;
  RootSystem source = rs3;
  if (source.roots.empty()) source.roots = close_under_reflections(Ambient::Dim3, source.simple_roots).roots;
  return InductionResult{std::move(source), std::move(g), std::move(induced), id.name};
}

RootSystem induce_sub(const RootSystem& rs3_sub, const InductionResult& parent) {
  const RootSet parent_roots(parent.source.roots);
  for (const auto& r : rs3_sub.roots) {
    if (!parent_roots.contains(r)) throw SubsetError("induce_sub: root " + to_string(r) + " is not in the parent system");
  }
  for (const auto& r : rs3_sub.simple_roots) {
    if (!parent_roots.contains(r)) throw SubsetError("induce_sub: root " + to_string(r) + " is not in the parent system");
  }
  RootSystem sub = induce(rs3_sub).induced;
  const RootSet parent_induced(parent.induced.roots);
  for (const auto& r : sub.roots) {
    if (!parent_induced.contains(r))
      throw SubsetError("induce_sub: spinor " + to_string(r) + " is not in the parent induced system");
  }
  return sub;
}

int i2_order(const Multivector& alpha1, const Multivector& alpha2) {
  require_unit_vector(alpha1, "double");
  require_unit_vector(alpha2, "double");
  const FieldElement c = vector_dot(alpha1, alpha2);
  for (int n : {2, 3, 4, 5}) {
    if (c == systems::i2_simple_root_cosine(n)) return n;
  }
  throw ContractError("double: roots are not I2(n) simple roots for n in {2, 3, 4, 5}; "
                      "other n need cos(pi/n) outside Q(sqrt2, sqrt5)");
}

RootSystem double_i2(const Multivector& alpha1, const Multivector& alpha2, std::size_t cap) {
  const int n = i2_order(alpha1, alpha2);
  const Multivector i = Multivector::pseudoscalar();
  const std::vector<Multivector> simple{alpha1 * alpha1, alpha1 * alpha2, alpha1 * i, alpha2 * i};
  RootSystem rs = close_under_reflections(Ambient::Dim4Spinor, simple, cap);
  if (rs.size() != static_cast<std::size_t>(4 * n)) throw std::logic_error("double: unexpected root count");
  return rs;
}

std::vector<Multivector> named_simple_roots(const std::string& label) {
  const auto a = systems::h3_simple_roots();
  const Multivector i = Multivector::pseudoscalar();
  if (label == "D4") {
    return {word_product(a, "11"), word_product(a, "12"), word_product(a, "12323123"),
            word_product(a, "32132132")};
  }
  if (label == "A4") {
    return {word_product(a, "11"), word_product(a, "12"), word_product(a, "13213213"),
            word_product(a, "321321323123")};
  }
  if (label == "A2+A2") return {a[0] * a[0], a[0] * a[1], a[0] * i, a[1] * i};
  if (label == "H2+H2") return {a[1] * a[1], a[1] * a[2], a[1] * i, a[2] * i};
  if (label == "A1^4") {
    return {Multivector(FieldElement(1)), Multivector::even(0, 1, 0, 0), Multivector::even(0, 0, 0, 1),
            Multivector::even(0, 0, 1, 0)};
  }
  throw ContractError("named_simple_roots: unknown label '" + label + "'");
}

RootSystem h4_root_system(std::size_t cap) {
  RootSystem h3;
  h3.simple_roots = systems::h3_simple_roots();
  return induce(h3, cap).induced;
}

RootSystem named_subsystem(const std::string& label, std::size_t cap) {
  auto simple = named_simple_roots(label);
  RootSystem rs = close_under_reflections(Ambient::Dim4Spinor, simple, cap);
  rs.simple_roots = std::move(simple);
  return rs;
}

}  // namespace rootforge
