#pragma once

// Coxeter plane of a spinor root system: two-colouring of the Coxeter
// diagram, fundamental weights (exact), Perron-Frobenius data and the
// projection of vertex sets to the plane (floating point from here on).

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rootforge/rootsys.hpp"

namespace rootforge {

/// 0-based simple-root indices.
struct Bipartition {
  std::vector<std::size_t> black;
  std::vector<std::size_t> white;
};

/// Breadth-first two-colouring of the diagram (off-diagonal support). The
/// lowest uncoloured index of every component is black. Throws
/// ContractError if the diagram has an odd cycle.
Bipartition bipartition(const CartanMatrix& cartan);

/// Reciprocal basis: inner(a, w_i, alpha_j) = delta_ij, exact. Throws
/// ContractError if the Gram matrix of the simple roots is singular.
std::vector<Multivector> fundamental_weights(const std::vector<Multivector>& simple_roots,
                                             Ambient a = Ambient::Dim4Spinor);

struct PerronFrobenius {
  double eigenvalue = 0;            // 2 - mu_max(2I - A), smallest eigenvalue of A
  std::vector<double> eigenvector;  // unit length, positive entries
  std::size_t iterations = 0;
  double residual = 0;              // |M v - mu v|
};

inline constexpr double kPowerIterationTolerance = 1e-14;
inline constexpr std::size_t kPowerIterationLimit = 1000000;

/// Dominant eigenpair of M = 2I - A by power iteration. Throws
/// ConvergenceError when successive iterates still differ by more than
/// the tolerance after the iteration limit.
PerronFrobenius perron_frobenius(const CartanMatrix& cartan);

using Point4 = std::array<double, 4>;
using Point2 = std::array<double, 2>;

struct ProjectionPlane {
  Point4 black_vec{};
  Point4 white_vec{};
  double pf_eigenvalue = 0;
};

/// B = sum over black v_i w_i, W = sum over white v_i w_i, mapped to R^4
/// and orthonormalised (B direction first). Throws ContractError when the
/// plane degenerates.
ProjectionPlane build_plane(const std::vector<Multivector>& simple_roots, const Bipartition& colours,
                            const PerronFrobenius& pf);

/// (v4 . b, v4 . w) for each vertex, input order preserved.
std::vector<Point2> project(const ProjectionPlane& plane, const std::vector<Multivector>& vertices);

/// 4D simple roots of H4 in the even subalgebra built from the H3
/// generators: a1 a1, a1 a2, e1e2 a2 e3, a2 e1e2e3.
std::vector<Multivector> h4_coxeter_simple_roots();

/// The H4 Coxeter plane from h4_coxeter_simple_roots().
ProjectionPlane h4_coxeter_plane();

/// Distinct radii of the points, merging values closer than tol.
std::vector<double> distinct_radii(const std::vector<Point2>& points, double tol = 1e-9);

/// SVG drawing: dots for points, segments for edges. The viewBox is the
/// unit circle scaled to the largest radius plus a 5% margin, y pointing up.
std::string render_svg(const std::vector<Point2>& points,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       const std::string& title);

/// "x,y" rows with a header line.
std::string render_csv(const std::vector<Point2>& points);

}  // namespace rootforge
