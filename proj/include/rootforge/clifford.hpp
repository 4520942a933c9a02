#pragma once

// Cl(3) over Q(sqrt2, sqrt5).
//
// Blade order is fixed: 1, e1, e2, e3, e1e2, e1e3, e2e3, e1e2e3. The e1e3
// slot holds the coefficient of e1e3 (not e3e1).

#include <array>
#include <cstddef>
#include <span>
#include <string>

#include "rootforge/errors.hpp"
#include "rootforge/field.hpp"

namespace rootforge {

enum Blade : std::size_t { kScalar = 0, kE1, kE2, kE3, kE12, kE13, kE23, kE123 };

inline constexpr std::size_t kBladeCount = 8;

/// Grade of each blade in storage order.
inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

class Multivector {
public:
  Multivector() = default;
  Multivector(const FieldElement& scalar) { c_[kScalar] = scalar; }  // NOLINT
  explicit Multivector(std::array<FieldElement, kBladeCount> coeffs) : c_(std::move(coeffs)) {}

  static Multivector blade(Blade b, const FieldElement& coeff = FieldElement(1));
  static Multivector vector(const FieldElement& x, const FieldElement& y, const FieldElement& z);
  /// s + b12 e1e2 + b13 e1e3 + b23 e2e3
  static Multivector even(const FieldElement& s, const FieldElement& b12, const FieldElement& b13,
                          const FieldElement& b23);
  static Multivector pseudoscalar() { return blade(kE123); }

  const FieldElement& operator[](std::size_t b) const { return c_[b]; }
  FieldElement& operator[](std::size_t b) { return c_[b]; }
  const std::array<FieldElement, kBladeCount>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_even() const;      // grades 1 and 3 vanish
  bool is_vector() const;    // only grade 1
  bool is_scalar() const;

  Multivector& operator+=(const Multivector& y);
  Multivector& operator-=(const Multivector& y);
  Multivector& operator*=(const FieldElement& s);
  friend Multivector operator+(Multivector x, const Multivector& y) { return x += y; }
  friend Multivector operator-(Multivector x, const Multivector& y) { return x -= y; }
  friend Multivector operator*(Multivector x, const FieldElement& s) { return x *= s; }
  friend Multivector operator*(const FieldElement& s, Multivector x) { return x *= s; }
  Multivector operator-() const;

  /// Geometric product.
  friend Multivector operator*(const Multivector& x, const Multivector& y);

  friend bool operator==(const Multivector& x, const Multivector& y) { return x.c_ == y.c_; }

  std::size_t hash() const;

private:
  std::array<FieldElement, kBladeCount> c_{};
};

struct MultivectorHash {
  std::size_t operator()(const Multivector& m) const { return m.hash(); }
};

Multivector geometric_product(const Multivector& x, const Multivector& y);

/// Reversion: grades 2 and 3 change sign.
Multivector reverse(const Multivector& x);

/// Projection onto grade k (0..3).
Multivector grade(const Multivector& x, int k);

/// Scalar part of x*y for vectors, i.e. the Euclidean dot product.
FieldElement vector_dot(const Multivector& x, const Multivector& y);

/// s_alpha(x) = -alpha x alpha for a unit vector alpha and a vector x.
Multivector reflect(const Multivector& alpha, const Multivector& x);

/// parity * reverse(v) x v. v must satisfy v reverse(v) = +-1; parity is +-1.
Multivector versor_sandwich(const Multivector& v, const Multivector& x, int parity);

/// A Cl(3) element with vanishing odd part.
class Spinor {
public:
  Spinor() = default;
  /// Throws ContractError when m has a non-zero odd part.
  explicit Spinor(Multivector m);
  Spinor(const FieldElement& s, const FieldElement& b12, const FieldElement& b13, const FieldElement& b23)
      : mv_(Multivector::even(s, b12, b13, b23)) {}

  const Multivector& value() const { return mv_; }

  // Components of R = a0 + a1 e2e3 + a2 e3e1 + a3 e1e2.
  const FieldElement& a0() const { return mv_[kScalar]; }
  const FieldElement& a1() const { return mv_[kE23]; }
  FieldElement a2() const { return -mv_[kE13]; }
  const FieldElement& a3() const { return mv_[kE12]; }

  Spinor operator-() const { return Spinor(-mv_); }
  friend Spinor operator*(const Spinor& x, const Spinor& y) { return Spinor(x.mv_ * y.mv_); }
  friend bool operator==(const Spinor& x, const Spinor& y) { return x.mv_ == y.mv_; }

private:
  Multivector mv_;
};

struct SpinorHash {
  std::size_t operator()(const Spinor& s) const { return s.value().hash(); }
};

Spinor reverse(const Spinor& r);

/// Scalar part of (r1 ~r2 + r2 ~r1) / 2.
FieldElement spinor_inner(const Spinor& r1, const Spinor& r2);

/// -r1 ~r2 r1; r1 must have unit norm.
Spinor spin_reflect(const Spinor& r1, const Spinor& r2);

struct Vector4 {
  std::array<FieldElement, 4> x{};

  friend bool operator==(const Vector4&, const Vector4&) = default;
};

FieldElement dot(const Vector4& u, const Vector4& v);

/// (a0, a3, -a2, a1), i.e. (scalar, e1e2, e1e3, e2e3) coefficients.
Vector4 spinor_to_vector4(const Spinor& r);

/// Even-subalgebra and Euclidean-space forms that skip the contract checks;
/// callers guarantee the preconditions.
namespace detail {
FieldElement spinor_inner(const Multivector& r1, const Multivector& r2);
Multivector spin_reflect(const Multivector& r1, const Multivector& r2);
Multivector reflect(const Multivector& alpha, const Multivector& x);
}  // namespace detail

/// Plain rendering with field coefficients, e.g. "1/2 + (1/4 + 1/4·√5) e₁∧e₂".
std::string to_string(const Multivector& m);

/// Rendering of 2*m with tau/sigma written symbolically, in the layout of
/// the group tables, e.g. "-1 + τ e₁∧e₂ + σ e₂∧e₃".
std::string to_string_x2(const Multivector& m);

/// Coefficient rendering used by to_string_x2 ("τ", "-σ", "2", "(1 + τ)").
std::string format_golden(const FieldElement& c);

const char* blade_name(std::size_t b);

}  // namespace rootforge
