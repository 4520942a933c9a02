#pragma once

// Exact arithmetic in the biquadratic field Q(sqrt2, sqrt5).
//
// An element is stored as a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational
// coefficients. {1, sqrt2, sqrt5, sqrt10} is a Q-basis, so the coefficient
// tuple is unique and equality is coefficient-wise.

#include <array>
#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace rootforge {

using Rational = mpq_class;

/// Index of a basis radical inside a FieldElement.
enum class Radical : std::size_t { One = 0, Sqrt2 = 1, Sqrt5 = 2, Sqrt10 = 3 };

class FieldElement {
public:
  FieldElement() = default;
  FieldElement(long value) : coeffs_{Rational(value), 0, 0, 0} {}  // NOLINT
  FieldElement(const Rational& value) : coeffs_{value, 0, 0, 0} {}  // NOLINT
  FieldElement(Rational a, Rational b, Rational c, Rational d);

  /// num/den as a rational element; den must be non-zero.
  static FieldElement fraction(long num, long den);

  static FieldElement tau();     // (1 + sqrt5) / 2
  static FieldElement sigma();   // (1 - sqrt5) / 2
  static FieldElement sqrt2();
  static FieldElement sqrt5();
  static FieldElement sqrt10();

  const Rational& operator[](Radical r) const { return coeffs_[static_cast<std::size_t>(r)]; }
  const std::array<Rational, 4>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) { return x.coeffs_ == y.coeffs_; }

  // Real ordering (exact, via sign()).
  friend bool operator<(const FieldElement& x, const FieldElement& y);
  friend bool operator>(const FieldElement& x, const FieldElement& y) { return y < x; }
  friend bool operator<=(const FieldElement& x, const FieldElement& y) { return !(y < x); }
  friend bool operator>=(const FieldElement& x, const FieldElement& y) { return !(x < y); }

  std::size_t hash() const;

private:
  std::array<Rational, 4> coeffs_{};
};

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inv(const FieldElement& x);

/// The automorphism sqrt5 -> -sqrt5 (tau -> sigma), sqrt2 fixed.
FieldElement galois_tau(const FieldElement& x);

/// The automorphism sqrt2 -> -sqrt2, sqrt5 fixed.
FieldElement galois_sqrt2(const FieldElement& x);

/// Exact sign under the real embedding: -1, 0 or +1.
int sign(const FieldElement& x);

/// Nearest double to the exact value. Throws std::overflow_error when the
/// value is outside the double range.
double to_float(const FieldElement& x);

/// "1/2 + 1/2·√5" style rendering. Zero prints as "0".
std::string to_string(const FieldElement& x);

std::string to_string(const Rational& q);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};

}  // namespace rootforge
