#ifndef UPEXT_QUADRATURE_HPP
#define UPEXT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace upext {

/// n-point Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
struct GaussLegendre {
  std::vector<double> nodes, weights;

  explicit GaussLegendre(std::size_t n) : nodes(n), weights(n) {
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
      double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 - (static_cast<double>(j) - 1.0) * p3) /
               static_cast<double>(j);
        }
        dp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      nodes[i] = -z;
      nodes[n - 1 - i] = z;
      weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

/**
 * Composite Gauss-Legendre rule in the angle theta in (0, pi), for integrals
 * of the form int_{-1}^{1} f(x) dx = int_0^pi f(cos theta) sin theta dtheta.
 *
 * The interval is cut into uniform panels, and the two end panels are graded
 * geometrically towards theta = 0 and theta = pi, which handles integrable
 * algebraic endpoint behaviour (x -> +-1) at a geometric rate.
 */
struct AngularMesh {
  std::size_t panels = 64;
  std::size_t nodes_per_panel = 32;
  std::size_t grading_levels = 40;
  double grading_ratio = 0.15;

  std::vector<double> breakpoints() const {
    const double w = std::numbers::pi / static_cast<double>(panels);
    std::vector<double> bp;
    bp.push_back(0.0);
    for (std::size_t l = grading_levels; l >= 1; --l) bp.push_back(w * std::pow(grading_ratio, static_cast<double>(l)));
    for (std::size_t k = 1; k < panels; ++k) bp.push_back(w * static_cast<double>(k));
    for (std::size_t l = 1; l <= grading_levels; ++l)
      bp.push_back(std::numbers::pi - w * std::pow(grading_ratio, static_cast<double>(l)));
    bp.push_back(std::numbers::pi);
    return bp;
  }

  AngularMesh refined() const {
    AngularMesh m = *this;
    m.panels *= 2;
    m.grading_levels += 10;
    return m;
  }
};

/// Accumulates sum_k weight_k * f(theta_k) for a vector-valued integrand; f adds into `acc` scaled by `w`.
inline std::vector<double> integrate_angle(const std::function<void(double theta, double w, std::vector<double>& acc)>& f,
                                           std::size_t size, const AngularMesh& mesh) {
  const GaussLegendre gl(mesh.nodes_per_panel);
  const auto bp = mesh.breakpoints();
  std::vector<double> acc(size, 0.0);
  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double half = 0.5 * (bp[p + 1] - bp[p]);
    const double mid = 0.5 * (bp[p + 1] + bp[p]);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) f(mid + half * gl.nodes[i], half * gl.weights[i], acc);
  }
  return acc;
}

/// Result of a self-checking angular integration.
struct AngularIntegral {
  std::vector<double> values;
  double change = 0.0;  // max |difference| between the last two refinements
  AngularMesh mesh;
};

/**
 * Integrates with successive mesh refinements until two consecutive results
 * agree to `tol` (max-norm). Throws if that does not happen within
 * `max_refinements`.
 */
inline AngularIntegral integrate_angle_converged(
    const std::function<void(double theta, double w, std::vector<double>& acc)>& f, std::size_t size,
    double tol = 1e-10, AngularMesh mesh = {}, int max_refinements = 4) {
  auto prev = integrate_angle(f, size, mesh);
  for (int it = 0; it < max_refinements; ++it) {
    const AngularMesh next_mesh = mesh.refined();
    auto cur = integrate_angle(f, size, next_mesh);
    double change = 0.0;
    for (std::size_t k = 0; k < size; ++k) change = std::max(change, std::abs(cur[k] - prev[k]));
    if (change <= tol) return {cur, change, next_mesh};
    prev = std::move(cur);
    mesh = next_mesh;
  }
  throw std::runtime_error("angular quadrature did not converge");
}

}  // namespace upext

#endif  // UPEXT_QUADRATURE_HPP
