#ifndef UPEXT_ZERO_COMPARISON_HPP
#define UPEXT_ZERO_COMPARISON_HPP

#include "upext/families.hpp"
#include "upext/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

namespace upext {

/// Signed zero comparison against a Chebyshev reference; min_gap < 0 means an inequality failed.
struct ZeroComparison {
  bool below = true;  // expected side: Grosjean zeros below the reference
  double min_gap = std::numeric_limits<double>::infinity();
  bool holds(double guard = 1e-9) const { return min_gap > guard; }
};

/// Zeros of monic T_n (first kind) or U_n (second kind), ascending.
inline std::vector<double> chebyshev_reference_zeros(GrosjeanKind kind, std::size_t n) {
  std::vector<double> z(n);
  const double nn = static_cast<double>(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double jj = static_cast<double>(j);
    z[j - 1] = kind == GrosjeanKind::first ? -std::cos((2.0 * jj - 1.0) * std::numbers::pi / (2.0 * nn))
                                           : -std::cos(jj * std::numbers::pi / (nn + 1.0));
  }
  return z;
}

/**
 * Markov comparison of Grosjean zeros with Chebyshev zeros. The weight ratio
 * w_T / w_G is ((1+x)/(1-x))^{alpha+1/2} up to a constant, and w_U / w_g is
 * ((1+x)/(1-x))^{alpha-1/2}; when it increases the Grosjean zeros sit below
 * the Chebyshev ones, when it decreases above. At the threshold the two sets
 * coincide and no strict comparison exists.
 */
inline ZeroComparison markov_comparison(GrosjeanKind kind, const Rational& alpha, std::size_t n, double tol = 1e-12) {
  const Rational threshold = kind == GrosjeanKind::first ? Rational(-1, 2) : Rational(1, 2);
  if (alpha == threshold) throw std::invalid_argument("no strict zero comparison at the Chebyshev parameter");
  const auto z = zeros(grosjean_coeffs(GrosjeanParam(alpha, kind)), n, tol);
  const auto ref = chebyshev_reference_zeros(kind, n);
  ZeroComparison out;
  out.below = alpha > threshold;
  for (std::size_t j = 0; j < n; ++j) out.min_gap = std::min(out.min_gap, out.below ? ref[j] - z[j] : z[j] - ref[j]);
  return out;
}

/// Smallest gap in the strict interlacing of two ascending sets a (size n) and b (size n + 1); negative on failure.
inline double interlacing_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (b.size() != a.size() + 1) throw std::invalid_argument("interlacing needs sizes n and n + 1");
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < a.size(); ++j) gap = std::min({gap, a[j] - b[j], b[j + 1] - a[j]});
  return gap;
}

}  // namespace upext

#endif  // UPEXT_ZERO_COMPARISON_HPP
