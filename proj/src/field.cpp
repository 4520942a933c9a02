#include "rootforge/field.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include <mpfr.h>

namespace rootforge {

namespace {

// r + s*sqrt2 over Q, used for the recursive sign test.
int sign_q_sqrt2(const Rational& r, const Rational& s) {
  const int sr = sgn(r);
  const int ss = sgn(s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return sr == 0 ? ss : sr;
  // Opposite signs: |r| vs |s|*sqrt2 decided by r^2 - 2 s^2.
  const Rational diff = r * r - 2 * s * s;
  return sr * sgn(diff);
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_rational(const Rational& q) {
  std::size_t h = static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t()));
  hash_combine(h, static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t())));
  hash_combine(h, static_cast<std::size_t>(mpz_size(q.get_num_mpz_t())));
  return h;
}

}  // namespace

FieldElement::FieldElement(Rational a, Rational b, Rational c, Rational d)
    : coeffs_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& q : coeffs_) q.canonicalize();
}

FieldElement FieldElement::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("FieldElement::fraction: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return FieldElement(q);
}

FieldElement FieldElement::tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
FieldElement FieldElement::sigma() { return {Rational(1, 2), 0, Rational(-1, 2), 0}; }
FieldElement FieldElement::sqrt2() { return {0, 1, 0, 0}; }
FieldElement FieldElement::sqrt5() { return {0, 0, 1, 0}; }
FieldElement FieldElement::sqrt10() { return {0, 0, 0, 1}; }

bool FieldElement::is_zero() const {
  for (const auto& q : coeffs_)
    if (sgn(q) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  return sgn(coeffs_[1]) == 0 && sgn(coeffs_[2]) == 0 && sgn(coeffs_[3]) == 0;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  for (std::size_t i = 0; i < 4; ++i)
    if (sgn(y.coeffs_[i]) != 0) coeffs_[i] += y.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  for (std::size_t i = 0; i < 4; ++i)
    if (sgn(y.coeffs_[i]) != 0) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.coeffs_) q = -q;
  return r;
}

// Basis products: sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5,
// sqrt5*sqrt10 = 5 sqrt2, sqrt10^2 = 10.
FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  struct Entry {
    int target;
    int factor;
  };
  static constexpr Entry kTable[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, 2}, {3, 1}, {2, 2}},
      {{2, 1}, {3, 1}, {0, 5}, {1, 5}},
      {{3, 1}, {2, 2}, {1, 5}, {0, 10}},
  };
  FieldElement r;
  Rational t;
  for (int i = 0; i < 4; ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(y.coeffs_[j]) == 0) continue;
      const Entry e = kTable[i][j];
      t = x.coeffs_[i] * y.coeffs_[j];
      if (e.factor != 1) t *= e.factor;
      r.coeffs_[e.target] += t;
    }
  }
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  *this = *this * y;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& y) {
  *this = *this * inv(y);
  return *this;
}

bool operator<(const FieldElement& x, const FieldElement& y) { return sign(x - y) < 0; }

std::size_t FieldElement::hash() const {
  std::size_t h = 0;
  for (const auto& q : coeffs_) hash_combine(h, hash_rational(q));
  return h;
}

FieldElement galois_tau(const FieldElement& x) {
  const auto& c = x.coefficients();
  return {c[0], c[1], -c[2], -c[3]};
}

FieldElement galois_sqrt2(const FieldElement& x) {
  const auto& c = x.coefficients();
  return {c[0], -c[1], c[2], -c[3]};
}

FieldElement inv(const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("FieldElement: division by zero");
  if (x.is_rational()) return FieldElement(Rational(1 / x[Radical::One]));
  // x * x' * x'' * x''' is rational (the field norm).
  const FieldElement conj = galois_sqrt2(x) * galois_tau(x) * galois_sqrt2(galois_tau(x));
  const FieldElement norm = x * conj;
  const Rational n = norm[Radical::One];
  const auto& c = conj.coefficients();
  return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

int sign(const FieldElement& x) {
  const auto& [a, b, c, d] = x.coefficients();
  // x = p + q*sqrt5 with p = a + b sqrt2, q = c + d sqrt2.
  const int sp = sign_q_sqrt2(a, b);
  const int sq = sign_q_sqrt2(c, d);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sp == 0 ? sq : sp;
  // p^2 - 5 q^2 as an element of Q(sqrt2).
  const Rational r = a * a + 2 * b * b - 5 * c * c - 10 * d * d;
  const Rational s = 2 * a * b - 10 * c * d;
  return sp * sign_q_sqrt2(r, s);
}

double to_float(const FieldElement& x) {
  if (x.is_zero()) return 0.0;
  const auto& coeffs = x.coefficients();
  static constexpr int kRadicands[4] = {1, 2, 5, 10};

  // Ziv-style loop: widen the working precision until the accumulated
  // error bound is well below half an ulp of the result.
  for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 4) {
    mpfr_t sum, term, root, bound;
    mpfr_inits2(prec, sum, term, root, bound, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    mpfr_set_zero(bound, 1);
    for (int i = 0; i < 4; ++i) {
      if (sgn(coeffs[i]) == 0) continue;
      mpfr_set_q(term, coeffs[i].get_mpq_t(), MPFR_RNDN);
      if (kRadicands[i] != 1) {
        mpfr_sqrt_ui(root, static_cast<unsigned long>(kRadicands[i]), MPFR_RNDN);
        mpfr_mul(term, term, root, MPFR_RNDN);
      }
      mpfr_add(sum, sum, term, MPFR_RNDN);
      mpfr_abs(term, term, MPFR_RNDN);
      if (mpfr_cmp(term, bound) > 0) mpfr_set(bound, term, MPFR_RNDN);
    }
    // |error| <= 16 * 2^-prec * max|term|; require |sum| >= 2^60 * error.
    mpfr_mul_2si(bound, bound, 64 - static_cast<long>(prec), MPFR_RNDU);
    mpfr_abs(term, sum, MPFR_RNDN);
    const bool accurate = mpfr_cmp(term, bound) >= 0;
    const double result = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, root, bound, static_cast<mpfr_ptr>(nullptr));
    if (accurate) {
      if (!std::isfinite(result)) throw std::overflow_error("to_float: value outside double range");
      return result;
    }
  }
  throw std::overflow_error("to_float: precision limit reached");
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const FieldElement& x) {
  static const char* const kNames[4] = {"", "√2", "√5", "√10"};
  std::string out;
  const auto& coeffs = x.coefficients();
  for (int i = 0; i < 4; ++i) {
    const Rational& q = coeffs[i];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    std::string body;
    if (i == 0) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = kNames[i];
    } else {
      body = mag.get_str() + "·" + kNames[i];
    }
    if (out.empty()) {
      out = (sgn(q) < 0 ? "-" : "") + body;
    } else {
      out += (sgn(q) < 0 ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace rootforge
