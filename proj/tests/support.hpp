#pragma once

// Shared helpers for the test binaries: random field elements and
// multivectors, an independent blade-product oracle and the reference
// table reader.

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootforge/clifford.hpp"
#include "rootforge/field.hpp"

#ifndef ROOTFORGE_TEST_DATA_DIR
#define ROOTFORGE_TEST_DATA_DIR "tests/data"
#endif

namespace testsupport {

using rootforge::FieldElement;
using rootforge::Multivector;
using rootforge::Rational;

inline constexpr std::size_t kPropertyCases = 1000;

class Random {
public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    Rational q(integer(-9, 9), integer(1, 6));
    q.canonicalize();
    return q;
  }

  FieldElement field() {
    // Roughly a third of coefficients are zero so sparse cases show up.
    auto coef = [this]() { return integer(0, 2) == 0 ? Rational(0) : rational(); };
    return FieldElement(coef(), coef(), coef(), coef());
  }

  FieldElement nonzero_field() {
    FieldElement x;
    while (x.is_zero()) x = field();
    return x;
  }

  Multivector multivector() {
    Multivector m;
    for (std::size_t b = 0; b < rootforge::kBladeCount; ++b) m[b] = integer(0, 1) ? field() : FieldElement();
    return m;
  }

  Multivector spinor() {
    return Multivector::even(field(), field(), field(), field());
  }

  Multivector vector() { return Multivector::vector(field(), field(), field()); }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

// Storage slot -> basis bitmask (bit k is e_{k+1}).
inline constexpr std::array<unsigned, 8> kMask = {0, 1, 2, 4, 3, 5, 6, 7};

inline std::size_t slot_of(unsigned mask) {
  for (std::size_t i = 0; i < 8; ++i)
    if (kMask[i] == mask) return i;
  throw std::logic_error("bad mask");
}

// Sign of e_A e_B for ascending-index blades A, B: one factor of -1 for
// every pair (i in A, j in B) with i > j.
inline int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned i = 0; i < 3; ++i)
    if (a & (1u << i))
      for (unsigned j = 0; j < i; ++j)
        if (b & (1u << j)) ++swaps;
  return swaps % 2 ? -1 : 1;
}

inline Multivector oracle_product(const Multivector& x, const Multivector& y) {
  Multivector r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (y[j].is_zero()) continue;
      const unsigned a = kMask[i], b = kMask[j];
      const FieldElement term = x[i] * y[j];
      const std::size_t k = slot_of(a ^ b);
      r[k] = reorder_sign(a, b) > 0 ? r[k] + term : r[k] - term;
    }
  }
  return r;
}

inline std::size_t blade_slot(const std::string& name) {
  static const std::array<const char*, 8> names = {"1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (name == names[i]) return i;
  throw std::invalid_argument("unknown blade " + name);
}

// Parses "+t*e12-1*e23+2*1" (values x2) and returns the actual element.
inline Multivector parse_x2(const std::string& s) {
  const FieldElement tau = FieldElement::tau();
  const FieldElement sigma = FieldElement::sigma();
  Multivector m;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char sign = s[pos++];
    const std::size_t star = s.find('*', pos);
    const std::string coef = s.substr(pos, star - pos);
    std::size_t end = s.find_first_of("+-", star);
    if (end == std::string::npos) end = s.size();
    const std::string blade = s.substr(star + 1, end - star - 1);
    FieldElement c = coef == "t" ? tau : coef == "s" ? sigma : FieldElement(std::stol(coef));
    if (sign == '-') c = -c;
    m[blade_slot(blade)] = m[blade_slot(blade)] + c * FieldElement::fraction(1, 2);
    pos = end;
  }
  return m;
}

struct TableRow {
  std::string table;
  int cls = 0;
  int order = 0;
  int number = 0;
  Multivector value;
  std::string path;
};

inline std::vector<TableRow> reference_rows() {
  std::ifstream f(std::string(ROOTFORGE_TEST_DATA_DIR) + "/reference_tables.txt");
  if (!f) throw std::runtime_error("reference_tables.txt not found");
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(field);
    while (fields.size() < 6) fields.emplace_back();
    TableRow r;
    r.table = fields[0];
    if (!fields[1].empty()) {
      r.cls = std::stoi(fields[1]);
      r.order = std::stoi(fields[2]);
      r.number = std::stoi(fields[3]);
    }
    if (fields[4].empty()) throw std::runtime_error("reference row without element: " + line);
    r.value = parse_x2(fields[4]);
    r.path = fields[5];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<TableRow> rows_of(const std::string& table) {
  std::vector<TableRow> out;
  for (auto& r : reference_rows())
    if (r.table == table) out.push_back(r);
  return out;
}

}  // namespace testsupport
