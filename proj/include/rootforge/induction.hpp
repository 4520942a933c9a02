#pragma once

// Inducing 4D root systems from 3D ones through their spinor groups, the
// pseudoscalar doubling of I2(n), and named spinorial simple-root words.

#include <string>
#include <vector>

#include "rootforge/groups.hpp"
#include "rootforge/rootsys.hpp"

namespace rootforge {

/// Standard 3D simple roots. All coordinates lie in Q(sqrt2, sqrt5).
namespace systems {

/// a1 = e2, a2 = (-tau e1 - e2 - (tau - 1) e3) / 2, a3 = e1.
std::vector<Multivector> h3_simple_roots();
/// (e1 - e2)/sqrt2, (e2 - e3)/sqrt2, (e2 + e3)/sqrt2.
std::vector<Multivector> a3_simple_roots();
/// (e1 - e2)/sqrt2, (e2 - e3)/sqrt2, e3.
std::vector<Multivector> b3_simple_roots();
/// e1, e2, e3.
std::vector<Multivector> a1_cubed_simple_roots();

/// Two unit roots at angle pi - pi/n, n in {2, 3, 4, 5}: (e1, e2),
/// (a1, a2) of H3, (e1, (-e1 + e2)/sqrt2), (a2, a3) of H3.
std::vector<Multivector> i2_simple_roots(int n);

/// A1 + I2(n) with the A1 root orthogonal to the I2(n) plane. Only even n
/// are representable over the field (the plane normal of an odd-n pair
/// needs sin(pi/n)); odd n throw ContractError.
std::vector<Multivector> a1_plus_i2_simple_roots(int n);

/// Values of cos(angle) between I2(n) simple roots, i.e. -cos(pi/n).
FieldElement i2_simple_root_cosine(int n);

}  // namespace systems

struct InductionResult {
  RootSystem source;
  VersorGroup spinor_group;
  RootSystem induced;
  std::string name;
};

/// Spin group of the 3D system read as a 4D spinor root system. Uses the
/// simple roots when present, else all roots (the group is the same).
InductionResult induce(const RootSystem& rs3, std::size_t cap = kDefaultGroupCap);

/// Induces a 3D subsystem and checks the result lies in parent.induced.
/// Throws SubsetError naming the first offending root.
RootSystem induce_sub(const RootSystem& rs3_sub, const InductionResult& parent);

/// I2(n) + I2(n) from two unit roots at angle pi - pi/n and the
/// pseudoscalar: spinorial simple roots (a1 a1, a1 a2, a1 I, a2 I).
RootSystem double_i2(const Multivector& alpha1, const Multivector& alpha2,
                     std::size_t cap = kDefaultClosureCap);

/// The n for which alpha1, alpha2 are I2(n) simple roots; throws
/// ContractError when n is not in {2, 3, 4, 5}.
int i2_order(const Multivector& alpha1, const Multivector& alpha2);

/// Spinorial simple roots for "D4", "A4", "A2+A2" or "H2+H2" built from
/// the H3 generators.
std::vector<Multivector> named_simple_roots(const std::string& label);

/// Spinor root systems used by the splitting and Coxeter-plane pipelines.
RootSystem h4_root_system(std::size_t cap = kDefaultGroupCap);
RootSystem named_subsystem(const std::string& label, std::size_t cap = kDefaultClosureCap);  // also "A1^4"

}  // namespace rootforge
