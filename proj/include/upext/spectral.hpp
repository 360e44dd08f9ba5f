#ifndef UPEXT_SPECTRAL_HPP
#define UPEXT_SPECTRAL_HPP

#include "upext/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace upext {

/// Leading N x N block of the symmetric Jacobi matrix: diag b_0..b_{N-1}, offdiag a_1..a_{N-1}.
struct TridiagonalN {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

inline TridiagonalN truncate(const CoefficientSequence& seq, std::size_t N) {
  if (N < 1) throw std::invalid_argument("truncation size must be at least 1");
  TridiagonalN t;
  t.diag.resize(N);
  t.offdiag.resize(N - 1);
  for (std::size_t k = 0; k < N; ++k) t.diag[k] = seq.b(k);
  for (std::size_t k = 1; k < N; ++k) t.offdiag[k - 1] = seq.a(k);
  return t;
}

/// Interval containing the whole spectrum.
inline std::pair<double, double> gershgorin_bounds(const TridiagonalN& t) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const std::size_t n = t.size();
  for (std::size_t k = 0; k < n; ++k) {
    double radius = 0.0;
    if (k > 0) radius += std::abs(t.offdiag[k - 1]);
    if (k + 1 < n) radius += std::abs(t.offdiag[k]);
    lo = std::min(lo, t.diag[k] - radius);
    hi = std::max(hi, t.diag[k] + radius);
  }
  return {lo, hi};
}

/**
 * Number of eigenvalues strictly below lambda (Sylvester inertia of T - lambda I).
 *
 * Uses the pivots d_k = (b_k - lambda) - a_k^2 / d_{k-1} of the LDL^T
 * factorisation. Each pivot is a ratio P_{k+1}(lambda)/P_k(lambda) of
 * consecutive characteristic polynomials, so nothing over- or underflows
 * and no rescaling pass is needed. A zero pivot is nudged to a tiny negative
 * value, which keeps the count exact for lambda strictly between eigenvalues.
 */
inline std::size_t sturm_count(const TridiagonalN& t, double lambda) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double off2 = k == 0 ? 0.0 : t.offdiag[k - 1] * t.offdiag[k - 1];
    d = (t.diag[k] - lambda) - (k == 0 ? 0.0 : off2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

/// The eigenvalues with (0-based, ascending) indices in [first, last), by bisection.
inline std::vector<double> eigenvalues_by_index(const TridiagonalN& t, std::size_t first, std::size_t last,
                                                double tol = 1e-13) {
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalue tolerance must be positive");
  auto [lo0, hi0] = gershgorin_bounds(t);
  const double pad = 1e-12 * std::max({1.0, std::abs(lo0), std::abs(hi0)});
  lo0 -= pad;
  hi0 += pad;
  std::vector<double> out;
  out.reserve(last - first);
  double lo_hint = lo0;
  for (std::size_t k = first; k < last; ++k) {
    // smallest lambda with count(lambda) > k
    double lo = lo_hint, hi = hi0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(t, mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    const double v = 0.5 * (lo + hi);
    out.push_back(v);
    lo_hint = lo;
  }
  return out;
}

/// All N eigenvalues, ascending, to absolute accuracy tol.
inline std::vector<double> eigenvalues(const TridiagonalN& t, double tol = 1e-13) {
  return eigenvalues_by_index(t, 0, t.size(), tol);
}

/// Eigenvalues lying in the open interval (lo, hi).
inline std::vector<double> eigenvalues_in(const TridiagonalN& t, double lo, double hi, double tol = 1e-13) {
  const std::size_t first = sturm_count(t, lo);
  std::size_t last = sturm_count(t, hi);
  std::vector<double> v = eigenvalues_by_index(t, first, last, tol);
  std::erase_if(v, [&](double e) { return !(e > lo && e < hi); });
  return v;
}

/// Zeros of the monic P_n: eigenvalues of the n x n truncation.
inline std::vector<double> zeros(const CoefficientSequence& seq, std::size_t n, double tol = 1e-13) {
  if (n == 0) return {};
  return eigenvalues(truncate(seq, n), tol);
}

/// Gauss rule for the (probability) orthogonality measure of a sequence.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

/// Solves (T - x I) y = rhs by Gaussian elimination with partial pivoting (two superdiagonals of fill-in).
inline std::vector<double> shifted_solve(const TridiagonalN& t, double x, std::vector<double> rhs) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  const std::size_t n = t.size();
  std::vector<double> d(n), u(n, 0.0), w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - x;
  for (std::size_t i = 0; i + 1 < n; ++i) u[i] = t.offdiag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double l = t.offdiag[i];
    const bool has_next = i + 2 < n;
    if (std::abs(d[i]) >= std::abs(l)) {
      if (d[i] == 0.0) d[i] = tiny;
      const double m = l / d[i];
      d[i + 1] -= m * u[i];
      if (has_next) u[i + 1] -= m * w[i];
      rhs[i + 1] -= m * rhs[i];
    } else {
      const double m = d[i] / l;
      const double ui = u[i], wi = w[i], dn = d[i + 1], un = has_next ? u[i + 1] : 0.0;
      d[i] = l;
      u[i] = dn;
      w[i] = un;
      d[i + 1] = ui - m * dn;
      if (has_next) u[i + 1] = wi - m * un;
      const double ri = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = ri - m * rhs[i + 1];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  std::vector<double> y(n);
  for (std::size_t k = n; k-- > 0;) {
    double v = rhs[k];
    if (k + 1 < n) v -= u[k] * y[k + 1];
    if (k + 2 < n) v -= w[k] * y[k + 2];
    y[k] = v / d[k];
  }
  return y;
}

/// Squared first component of the unit eigenvector for eigenvalue x, by inverse iteration.
inline double first_component_squared(const TridiagonalN& t, double x) {
  std::vector<double> v(t.size(), 1.0);
  for (int iter = 0; iter < 3; ++iter) {
    v = shifted_solve(t, x, std::move(v));
    double scale = 0.0;
    for (double e : v) scale = std::max(scale, std::abs(e));
    for (double& e : v) e /= scale;
  }
  double norm2 = 0.0;
  for (double e : v) norm2 += e * e;
  return v[0] * v[0] / norm2;
}

}  // namespace detail

/**
 * N-point Gauss rule: nodes are the zeros of P_N, weights the squared first
 * components of the unit eigenvectors. This equals 1 / sum_{j<N} p_j(x_k)^2,
 * but stays accurate at nodes outside [-1, 1], where the forward recurrence
 * for p_j amplifies the rounding error in x_k geometrically.
 */
inline QuadratureRule gauss_rule(const CoefficientSequence& seq, std::size_t N, double tol = 1e-14) {
  if (N < 1) throw std::invalid_argument("gauss_rule needs N >= 1");
  const TridiagonalN t = truncate(seq, N);
  QuadratureRule rule;
  rule.nodes = eigenvalues(t, tol);
  rule.weights.reserve(N);
  for (double x : rule.nodes) rule.weights.push_back(detail::first_component_squared(t, x));
  return rule;
}

}  // namespace upext

#endif  // UPEXT_SPECTRAL_HPP
