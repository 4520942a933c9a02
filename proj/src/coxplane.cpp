#include "rootforge/coxplane.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <sstream>

#include "rootforge/errors.hpp"
#include "rootforge/induction.hpp"

namespace rootforge {

namespace {

Point4 to_point4(const Multivector& x) {
  const auto c = coordinates(Ambient::Dim4Spinor, x);
  return {to_float(c[0]), to_float(c[1]), to_float(c[2]), to_float(c[3])};
}

double dot4(const Point4& u, const Point4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

}  // namespace

Bipartition bipartition(const CartanMatrix& cartan) {
  const std::size_t n = cartan.rank();
  std::vector<int> colour(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan(i, j).is_zero()) continue;
        if (colour[j] == -1) {
          colour[j] = 1 - colour[i];
          queue.push_back(j);
        } else if (colour[j] == colour[i]) {
          throw ContractError("bipartition: Coxeter diagram is not bipartite");
        }
      }
    }
  }
  Bipartition out;
  for (std::size_t i = 0; i < n; ++i) (colour[i] == 0 ? out.black : out.white).push_back(i);
  return out;
}

std::vector<Multivector> fundamental_weights(const std::vector<Multivector>& simple_roots, Ambient a) {
  const std::size_t n = simple_roots.size();
  if (n == 0) throw ContractError("fundamental_weights: no simple roots");
  // Solve G C = I for C = G^-1; then w_i = sum_k C_ik alpha_k.
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = inner(a, simple_roots[i], simple_roots[j]);
    m[i][n + i] = FieldElement(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw ContractError("fundamental_weights: simple roots are linearly dependent");
    std::swap(m[col], m[pivot]);
    const FieldElement scale = inv(m[col][col]);
    for (auto& x : m[col]) x = x * scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Multivector> weights;
  for (std::size_t i = 0; i < n; ++i) {
    Multivector w;
    for (std::size_t k = 0; k < n; ++k) {
      Multivector term = simple_roots[k];
      term *= m[i][n + k];
      w += term;
    }
    weights.push_back(w);
  }
  return weights;
}

PerronFrobenius perron_frobenius(const CartanMatrix& cartan) {
  const std::size_t n = cartan.rank();
  if (n == 0) throw ContractError("perron_frobenius: empty Cartan matrix");
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 2.0 : 0.0) - to_float(cartan(i, j));
  auto apply = [&](const std::vector<double>& x) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += m[i * n + j] * x[j];
    return y;
  };
  auto normalise = [](std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    for (double& v : x) v /= s;
  };

  // M has the symmetric spectrum +-mu of a bipartite graph, so plain power
  // iteration oscillates. M + I has the same eigenvectors and a unique
  // dominant eigenvalue.
  PerronFrobenius out;
  std::vector<double> x(n, 1.0);
  normalise(x);
  bool converged = false;
  for (std::size_t it = 1; it <= kPowerIterationLimit; ++it) {
    std::vector<double> y = apply(x);
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
    normalise(y);
    double diff = 0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(y[i] - x[i]));
    x = std::move(y);
    out.iterations = it;
    if (diff <= kPowerIterationTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("perron_frobenius: no convergence within the iteration limit");

  const std::vector<double> mx = apply(x);
  double mu = 0;
  for (std::size_t i = 0; i < n; ++i) mu += x[i] * mx[i];
  double res = 0;
  for (std::size_t i = 0; i < n; ++i) res += (mx[i] - mu * x[i]) * (mx[i] - mu * x[i]);
  out.eigenvalue = 2.0 - mu;
  out.eigenvector = std::move(x);
  out.residual = std::sqrt(res);
  return out;
}

ProjectionPlane build_plane(const std::vector<Multivector>& simple_roots, const Bipartition& colours,
                            const PerronFrobenius& pf) {
  if (pf.eigenvector.size() != simple_roots.size())
    throw ContractError("build_plane: eigenvector length does not match the simple roots");
  const auto weights = fundamental_weights(simple_roots);
  auto combine = [&](const std::vector<std::size_t>& idx) {
    Point4 p{};
    for (std::size_t i : idx) {
      const Point4 w = to_point4(weights.at(i));
      for (std::size_t k = 0; k < 4; ++k) p[k] += pf.eigenvector[i] * w[k];
    }
    return p;
  };
  Point4 b = combine(colours.black);
  Point4 w = combine(colours.white);
  const double nb = std::sqrt(dot4(b, b));
  const double nw = std::sqrt(dot4(w, w));
  if (nb == 0 || nw == 0) throw ContractError("build_plane: black or white vector vanishes");
  for (double& x : b) x /= nb;
  const double proj = dot4(w, b);
  for (std::size_t k = 0; k < 4; ++k) w[k] -= proj * b[k];
  const double nw2 = std::sqrt(dot4(w, w));
  if (nw2 <= 1e-12 * nw) throw ContractError("build_plane: black and white vectors are parallel");
  for (double& x : w) x /= nw2;
  return ProjectionPlane{b, w, pf.eigenvalue};
}

std::vector<Point2> project(const ProjectionPlane& plane, const std::vector<Multivector>& vertices) {
  std::vector<Point2> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) {
    const Point4 p = to_point4(v);
    out.push_back({dot4(p, plane.black_vec), dot4(p, plane.white_vec)});
  }
  return out;
}

std::vector<Multivector> h4_coxeter_simple_roots() {
  const auto a = systems::h3_simple_roots();
  const Multivector e12 = Multivector::blade(kE12);
  const Multivector e3 = Multivector::vector(0, 0, 1);
  const Multivector i = Multivector::pseudoscalar();
  return {a[0] * a[0], a[0] * a[1], e12 * a[1] * e3, a[1] * i};
}

ProjectionPlane h4_coxeter_plane() {
  const auto simple = h4_coxeter_simple_roots();
  const CartanMatrix a = cartan_matrix(Ambient::Dim4Spinor, simple);
  return build_plane(simple, bipartition(a), perron_frobenius(a));
}

std::vector<double> distinct_radii(const std::vector<Point2>& points, double tol) {
  std::vector<double> r;
  for (const auto& p : points) r.push_back(std::hypot(p[0], p[1]));
  std::sort(r.begin(), r.end());
  std::vector<double> out;
  for (double x : r)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

std::string render_svg(const std::vector<Point2>& points,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                       const std::string& title) {
  double rmax = 0;
  for (const auto& p : points) rmax = std::max(rmax, std::hypot(p[0], p[1]));
  const double scale = rmax > 0 ? 1.0 / rmax : 1.0;
  const double extent = 1.05;

  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -extent << ' ' << -extent << ' '
     << 2 * extent << ' ' << 2 * extent << "\" width=\"800\" height=\"800\">\n";
  os << "  <title>" << title << "</title>\n";
  os << "  <rect x=\"" << -extent << "\" y=\"" << -extent << "\" width=\"" << 2 * extent << "\" height=\""
     << 2 * extent << "\" fill=\"white\"/>\n";
  os << "  <g stroke=\"#4a6fa5\" stroke-width=\"0.002\" stroke-opacity=\"0.6\">\n";
  for (const auto& [i, j] : edges) {
    os << "    <line x1=\"" << points.at(i)[0] * scale << "\" y1=\"" << -points.at(i)[1] * scale << "\" x2=\""
       << points.at(j)[0] * scale << "\" y2=\"" << -points.at(j)[1] * scale << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g fill=\"#1b1b1b\">\n";
  for (const auto& p : points)
    os << "    <circle cx=\"" << p[0] * scale << "\" cy=\"" << -p[1] * scale << "\" r=\"0.008\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_csv(const std::vector<Point2>& points) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "x,y\n";
  for (const auto& p : points) os << p[0] << ',' << p[1] << '\n';
  return os.str();
}

}  // namespace rootforge
