#include "rootforge/clifford.hpp"

#include <utility>

namespace rootforge {

namespace {

// Storage index -> basis bitmask (bit 0 = e1, bit 1 = e2, bit 2 = e3).
constexpr std::array<unsigned, kBladeCount> kMask = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr std::array<std::size_t, kBladeCount> index_of_mask() {
  std::array<std::size_t, kBladeCount> idx{};
  for (std::size_t i = 0; i < kBladeCount; ++i) idx[kMask[i]] = i;
  return idx;
}

constexpr int popcount3(unsigned v) { return static_cast<int>((v & 1u) + ((v >> 1) & 1u) + ((v >> 2) & 1u)); }

// Sign of the reordering needed to bring blade(a) * blade(b) into canonical
// ascending order (Euclidean metric, e_i e_i = 1).
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned s = a >> 1; s != 0; s >>= 1) swaps += popcount3(s & b);
  return (swaps & 1) ? -1 : 1;
}

struct ProductEntry {
  std::size_t target;
  int sign;
};

constexpr std::array<std::array<ProductEntry, kBladeCount>, kBladeCount> make_table() {
  constexpr auto idx = index_of_mask();
  std::array<std::array<ProductEntry, kBladeCount>, kBladeCount> t{};
  for (std::size_t i = 0; i < kBladeCount; ++i)
    for (std::size_t j = 0; j < kBladeCount; ++j)
      t[i][j] = {idx[kMask[i] ^ kMask[j]], reorder_sign(kMask[i], kMask[j])};
  return t;
}

constexpr auto kProduct = make_table();

}  // namespace

Multivector Multivector::blade(Blade b, const FieldElement& coeff) {
  Multivector m;
  m.c_[b] = coeff;
  return m;
}

Multivector Multivector::vector(const FieldElement& x, const FieldElement& y, const FieldElement& z) {
  Multivector m;
  m.c_[kE1] = x;
  m.c_[kE2] = y;
  m.c_[kE3] = z;
  return m;
}

Multivector Multivector::even(const FieldElement& s, const FieldElement& b12, const FieldElement& b13,
                              const FieldElement& b23) {
  Multivector m;
  m.c_[kScalar] = s;
  m.c_[kE12] = b12;
  m.c_[kE13] = b13;
  m.c_[kE23] = b23;
  return m;
}

bool Multivector::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Multivector::is_even() const {
  return c_[kE1].is_zero() && c_[kE2].is_zero() && c_[kE3].is_zero() && c_[kE123].is_zero();
}

bool Multivector::is_vector() const {
  for (std::size_t b = 0; b < kBladeCount; ++b)
    if (kBladeGrade[b] != 1 && !c_[b].is_zero()) return false;
  return true;
}

bool Multivector::is_scalar() const {
  for (std::size_t b = 1; b < kBladeCount; ++b)
    if (!c_[b].is_zero()) return false;
  return true;
}

Multivector& Multivector::operator+=(const Multivector& y) {
  for (std::size_t b = 0; b < kBladeCount; ++b)
    if (!y.c_[b].is_zero()) c_[b] += y.c_[b];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& y) {
  for (std::size_t b = 0; b < kBladeCount; ++b)
    if (!y.c_[b].is_zero()) c_[b] -= y.c_[b];
  return *this;
}

Multivector& Multivector::operator*=(const FieldElement& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& c : r.c_)
    if (!c.is_zero()) c = -c;
  return r;
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  Multivector r;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      if (y.c_[j].is_zero()) continue;
      const ProductEntry e = kProduct[i][j];
      if (e.sign > 0) {
        r.c_[e.target] += x.c_[i] * y.c_[j];
      } else {
        r.c_[e.target] -= x.c_[i] * y.c_[j];
      }
    }
  }
  return r;
}

std::size_t Multivector::hash() const {
  std::size_t h = 0;
  for (const auto& c : c_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Multivector geometric_product(const Multivector& x, const Multivector& y) { return x * y; }

Multivector reverse(const Multivector& x) {
  Multivector r = x;
  for (std::size_t b = 0; b < kBladeCount; ++b)
    if (kBladeGrade[b] >= 2 && !r[b].is_zero()) r[b] = -r[b];
  return r;
}

Multivector grade(const Multivector& x, int k) {
  if (k < 0 || k > 3) throw ContractError("grade: k must be in 0..3");
  Multivector r;
  for (std::size_t b = 0; b < kBladeCount; ++b)
    if (kBladeGrade[b] == k) r[b] = x[b];
  return r;
}

FieldElement vector_dot(const Multivector& x, const Multivector& y) {
  return x[kE1] * y[kE1] + x[kE2] * y[kE2] + x[kE3] * y[kE3];
}

namespace detail {

Multivector reflect(const Multivector& alpha, const Multivector& x) { return -(alpha * x * alpha); }

FieldElement spinor_inner(const Multivector& r1, const Multivector& r2) {
  // Scalar part of r1 ~r2 equals the Euclidean dot product of the even
  // coefficient tuples; the symmetrised form has the same scalar part.
  return r1[kScalar] * r2[kScalar] + r1[kE12] * r2[kE12] + r1[kE13] * r2[kE13] + r1[kE23] * r2[kE23];
}

Multivector spin_reflect(const Multivector& r1, const Multivector& r2) { return -(r1 * reverse(r2) * r1); }

}  // namespace detail

Multivector reflect(const Multivector& alpha, const Multivector& x) {
  if (!alpha.is_vector()) throw ContractError("reflect: root is not a vector");
  if (!x.is_vector()) throw ContractError("reflect: argument is not a vector");
  if (vector_dot(alpha, alpha) != FieldElement(1)) throw ContractError("reflect: root is not unit norm");
  return detail::reflect(alpha, x);
}

Multivector versor_sandwich(const Multivector& v, const Multivector& x, int parity) {
  if (parity != 1 && parity != -1) throw ContractError("versor_sandwich: parity must be +1 or -1");
  const Multivector norm = v * reverse(v);
  if (!norm.is_scalar() || (norm[kScalar] != FieldElement(1) && norm[kScalar] != FieldElement(-1)))
    throw ContractError("versor_sandwich: argument is not a unit versor");
  Multivector r = reverse(v) * x * v;
  return parity > 0 ? r : -r;
}

Spinor::Spinor(Multivector m) : mv_(std::move(m)) {
  if (!mv_.is_even()) throw ContractError("Spinor: multivector has a non-zero odd part");
}

Spinor reverse(const Spinor& r) { return Spinor(reverse(r.value())); }

FieldElement spinor_inner(const Spinor& r1, const Spinor& r2) {
  return detail::spinor_inner(r1.value(), r2.value());
}

Spinor spin_reflect(const Spinor& r1, const Spinor& r2) {
  if (spinor_inner(r1, r1) != FieldElement(1)) throw ContractError("spin_reflect: root spinor is not unit norm");
  return Spinor(detail::spin_reflect(r1.value(), r2.value()));
}

FieldElement dot(const Vector4& u, const Vector4& v) {
  FieldElement s;
  for (std::size_t i = 0; i < 4; ++i) s += u.x[i] * v.x[i];
  return s;
}

Vector4 spinor_to_vector4(const Spinor& r) { return Vector4{{r.a0(), r.a3(), -r.a2(), r.a1()}}; }

const char* blade_name(std::size_t b) {
  static const char* const kNames[kBladeCount] = {"1",     "e₁",    "e₂",    "e₃",
                                                  "e₁∧e₂", "e₁∧e₃", "e₂∧e₃", "e₁∧e₂∧e₃"};
  return kNames[b];
}

namespace {

// Joins signed terms: the first keeps its sign, later ones become " + x" / " - x".
void append_term(std::string& out, std::string term) {
  const bool negative = !term.empty() && term.front() == '-';
  if (out.empty()) {
    out = std::move(term);
    return;
  }
  out += negative ? " - " : " + ";
  out += negative ? term.substr(1) : term;
}

std::string with_blade(std::string coeff, std::size_t b) {
  if (b == kScalar) return coeff;
  if (coeff == "1") return blade_name(b);
  if (coeff == "-1") return std::string("-") + blade_name(b);
  return coeff + " " + blade_name(b);
}

}  // namespace

std::string to_string(const Multivector& m) {
  std::string out;
  for (std::size_t b = 0; b < kBladeCount; ++b) {
    const FieldElement& c = m[b];
    if (c.is_zero()) continue;
    std::string coeff = to_string(c);
    const bool compound = coeff.find(' ') != std::string::npos;
    if (compound && b != kScalar) coeff = "(" + coeff + ")";
    append_term(out, with_blade(coeff, b));
  }
  return out.empty() ? "0" : out;
}

std::string format_golden(const FieldElement& c) {
  if (c[Radical::Sqrt2] != 0 || c[Radical::Sqrt10] != 0) return "(" + to_string(c) + ")";
  // c = p + q sqrt5 = (p - q) + 2q tau.
  const Rational& p = c[Radical::One];
  const Rational& q = c[Radical::Sqrt5];
  const Rational x = p - q;
  const Rational y = 2 * q;
  auto scaled = [](const Rational& k, const char* sym) -> std::string {
    if (k == 1) return sym;
    if (k == -1) return std::string("-") + sym;
    return k.get_str() + sym;
  };
  if (sgn(y) == 0) return x.get_str();
  if (sgn(x) == 0) return scaled(y, "τ");
  if (x == -y) return scaled(x, "σ");  // x + y tau = x (1 - tau) = x sigma
  std::string inner = x.get_str();
  inner += sgn(y) < 0 ? " - " : " + ";
  inner += scaled(abs(y), "τ");
  return "(" + inner + ")";
}

std::string to_string_x2(const Multivector& m) {
  std::string out;
  for (std::size_t b = 0; b < kBladeCount; ++b) {
    if (m[b].is_zero()) continue;
    append_term(out, with_blade(format_golden(FieldElement(2) * m[b]), b));
  }
  return out.empty() ? "0" : out;
}

}  // namespace rootforge
