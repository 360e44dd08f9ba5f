#ifndef UPEXT_ANTI_ASSOCIATED_HPP
#define UPEXT_ANTI_ASSOCIATED_HPP

#include "upext/polynomial.hpp"
#include "upext/rational.hpp"
#include "upext/recurrence.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace upext {

/**
 * The 2r parameters prepended to a Jacobi matrix, most-negative index first:
 *
 *     b_new  = [b_{-r}, ..., b_{-1}]
 *     a2_new = [a_{-r+1}^2, ..., a_{-1}^2, a_0^2]
 *
 * a_0^2 couples the new block to the original matrix and is the last entry of
 * a2_new. All a2 entries must be strictly positive.
 */
class ExtensionParams {
 public:
  ExtensionParams(std::vector<Rational> b_new, std::vector<Rational> a2_new)
      : b_(std::move(b_new)), a2_(std::move(a2_new)) {
    if (b_.empty()) throw std::invalid_argument("extension order r must be positive");
    if (b_.size() != a2_.size())
      throw std::invalid_argument("extension needs r diagonal and r off-diagonal entries (got " +
                                  std::to_string(b_.size()) + " and " + std::to_string(a2_.size()) + ")");
    for (const auto& v : a2_)
      if (!(v > 0)) throw std::invalid_argument("extension a^2 entries must be positive (got " + to_string(v) + ")");
    for (const auto& v : b_) b_real_.push_back(to_double(v));
    for (const auto& v : a2_) a2_real_.push_back(to_double(v));
  }

  /// Convenience constructor; each double is taken as the exact rational it represents.
  static ExtensionParams from_doubles(const std::vector<double>& b_new, const std::vector<double>& a2_new) {
    std::vector<Rational> b, a2;
    for (double v : b_new) b.emplace_back(v);
    for (double v : a2_new) a2.emplace_back(v);
    return ExtensionParams(std::move(b), std::move(a2));
  }

  std::size_t order() const { return b_.size(); }
  const std::vector<Rational>& b_new() const { return b_; }
  const std::vector<Rational>& a2_new() const { return a2_; }

  /// b_{-r+i}, 0 <= i < r.
  double b(std::size_t i) const { return b_real_.at(i); }
  /// a_{-r+i}^2, 1 <= i <= r (i = r is a_0^2).
  double a2(std::size_t i) const { return a2_real_.at(i - 1); }
  const Rational& b_exact(std::size_t i) const { return b_.at(i); }
  const Rational& a2_exact(std::size_t i) const { return a2_.at(i - 1); }

  const Rational& a0_squared_exact() const { return a2_.back(); }
  double a0_squared() const { return a2_real_.back(); }
  double a0() const { return std::sqrt(a0_squared()); }

  /// Parameters of the order r-k extension left after deleting the first k rows.
  ExtensionParams drop_front(std::size_t k) const {
    if (k >= order()) throw std::invalid_argument("drop_front would leave an empty extension");
    return ExtensionParams(std::vector<Rational>(b_.begin() + static_cast<long>(k), b_.end()),
                           std::vector<Rational>(a2_.begin() + static_cast<long>(k), a2_.end()));
  }

 private:
  std::vector<Rational> b_, a2_;
  std::vector<double> b_real_, a2_real_;
};

/// Recurrence of the upward extension J^(-r): r new rows on top, the original matrix shifted down.
inline CoefficientSequence extend(const CoefficientSequence& seq, const ExtensionParams& params) {
  const std::size_t r = params.order();
  auto b_real = [seq, params, r](std::size_t n) { return n < r ? params.b(n) : seq.b(n - r); };
  auto a2_real = [seq, params, r](std::size_t n) {
    if (n == 0) return 0.0;
    return n <= r ? params.a2(n) : seq.a2(n - r);
  };
  CoefficientSequence::ExactFn b_exact, a2_exact;
  if (seq.has_exact()) {
    b_exact = [seq, params, r](std::size_t n) { return n < r ? params.b_exact(n) : seq.b_exact(n - r); };
    a2_exact = [seq, params, r](std::size_t n) {
      if (n == 0) return Rational(0);
      return n <= r ? params.a2_exact(n) : seq.a2_exact(n - r);
    };
  }
  return CoefficientSequence(b_real, a2_real, b_exact, a2_exact,
                             seq.label() + "^(-" + std::to_string(r) + ")");
}

/**
 * Orthogonal polynomials Q_0..Q_r of the prepended r x r block,
 *
 *     Q_{n+1} = (x - b_{-r+n}) Q_n - a_{-r+n}^2 Q_{n-1},
 *
 * together with the orthonormal scalings q_n = Q_n / (a_{-r+1} ... a_{-r+n}).
 */
class QLadder {
 public:
  explicit QLadder(ExtensionParams params) : params_(std::move(params)) {
    const std::size_t r = params_.order();
    const RationalPolynomial x = RationalPolynomial::x();
    polys_.push_back(RationalPolynomial::constant(Rational(1)));
    norms_.push_back(1.0);
    for (std::size_t n = 0; n < r; ++n) {
      RationalPolynomial next = (x - RationalPolynomial::constant(params_.b_exact(n))) * polys_[n];
      if (n > 0) next -= polys_[n - 1] * params_.a2_exact(n);
      polys_.push_back(std::move(next));
      // a_{-r+1} ... a_{-r+n+1}
      norms_.push_back(norms_.back() * std::sqrt(params_.a2(n + 1)));
    }
  }

  std::size_t order() const { return params_.order(); }
  const ExtensionParams& params() const { return params_; }
  const std::vector<RationalPolynomial>& polys() const { return polys_; }
  const RationalPolynomial& poly(std::size_t n) const { return polys_.at(n); }

  /// Q_0(x)..Q_r(x) by the floating recurrence.
  std::vector<double> monic_values(double x) const {
    const std::size_t r = order();
    std::vector<double> v(r + 1);
    double prev = 0.0, cur = 1.0;
    v[0] = 1.0;
    for (std::size_t n = 0; n < r; ++n) {
      double next = (x - params_.b(n)) * cur - (n > 0 ? params_.a2(n) : 0.0) * prev;
      prev = cur;
      cur = next;
      v[n + 1] = cur;
    }
    return v;
  }

  double Q(std::size_t n, double x) const { return monic_values(x).at(n); }
  double q(std::size_t n, double x) const { return Q(n, x) / norms_.at(n); }
  double norm(std::size_t n) const { return norms_.at(n); }

 private:
  ExtensionParams params_;
  std::vector<RationalPolynomial> polys_;
  std::vector<double> norms_;
};

inline QLadder q_ladder(const ExtensionParams& params) { return QLadder(params); }

/**
 * Closed form for every degree up to n_max:
 *
 *     P^(-r)_{n+r} = Q_r P_n - a_0^2 Q_{r-1} P^(1)_{n-1}
 *
 * Returns [P^(-r)_0(x), ..., P^(-r)_{n_max + r}(x)]; entries m <= r are Q_m.
 */
inline std::vector<double> eval_anti_closed_all(const CoefficientSequence& seq, const QLadder& ladder,
                                                std::size_t n_max, double x) {
  const std::size_t r = ladder.order();
  const auto q = ladder.monic_values(x);
  const auto p = eval_monic(seq, n_max, x);
  const auto p1 = eval_associated(seq, 1, n_max == 0 ? 0 : n_max - 1, x);
  const double a0sq = ladder.params().a0_squared();
  std::vector<double> out(q.begin(), q.end() - 1);
  out.reserve(n_max + r + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double assoc = n == 0 ? 0.0 : p1[n - 1];
    out.push_back(q[r] * p[n] - a0sq * q[r - 1] * assoc);
  }
  return out;
}

/// P^(-r)_{n+r}(x) from the closed form.
inline double eval_anti_closed(const CoefficientSequence& seq, const ExtensionParams& params, std::size_t n, double x) {
  return eval_anti_closed_all(seq, QLadder(params), n, x).back();
}

/// P^(-r)_m(x) from the three-term recurrence of the extended matrix.
inline double eval_anti_direct(const CoefficientSequence& seq, const ExtensionParams& params, std::size_t m, double x) {
  return eval_monic(extend(seq, params), m, x).back();
}

/**
 * Orthonormal closed form for every degree up to n_max:
 *
 *     p^(-r)_{n+r} = q_r p_n - (a_0 / a_1) q_{r-1} p^(1)_{n-1}.
 */
inline std::vector<double> eval_anti_orthonormal_all(const CoefficientSequence& seq, const QLadder& ladder,
                                                     std::size_t n_max, double x) {
  const std::size_t r = ladder.order();
  const auto Q = ladder.monic_values(x);
  std::vector<double> q(r + 1);
  for (std::size_t k = 0; k <= r; ++k) q[k] = Q[k] / ladder.norm(k);
  const auto p = eval_orthonormal(seq, n_max, x);
  const auto p1 = eval_orthonormal(shift(seq, 1), n_max == 0 ? 0 : n_max - 1, x);
  const double ratio = ladder.params().a0() / seq.a(1);
  std::vector<double> out(q.begin(), q.end() - 1);
  out.reserve(n_max + r + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double assoc = n == 0 ? 0.0 : p1[n - 1];
    out.push_back(q[r] * p[n] - ratio * q[r - 1] * assoc);
  }
  return out;
}

/// p^(-r)_{n+r}(x).
inline double eval_anti_orthonormal(const CoefficientSequence& seq, const ExtensionParams& params, std::size_t n,
                                    double x) {
  return eval_anti_orthonormal_all(seq, QLadder(params), n, x).back();
}

/**
 * Checks [P^(-r)_{n+r}]^(k) = P^(k-r)_{n+r}: the order-k associated family of
 * the extension equals the extension of order r-k built from the remaining
 * parameters (k = r gives the base family back). Compares degrees 0..n at x
 * with a relative tolerance.
 */
inline bool shift_identity_check(const CoefficientSequence& seq, const ExtensionParams& params, std::size_t k,
                                 std::size_t n, double x, double rel_tol = 1e-12) {
  const std::size_t r = params.order();
  if (k > r) throw std::invalid_argument("shift_identity_check needs 0 <= k <= r");
  const auto lhs = eval_associated(extend(seq, params), k, n, x);
  const CoefficientSequence reference = k == r ? seq : extend(seq, params.drop_front(k));
  const auto rhs = eval_monic(reference, n, x);
  double scale = 1.0;
  for (double v : rhs.values) scale = std::max(scale, std::abs(v));
  for (std::size_t m = 0; m <= n; ++m)
    if (std::abs(lhs[m] - rhs[m]) > rel_tol * scale) return false;
  return true;
}

}  // namespace upext

#endif  // UPEXT_ANTI_ASSOCIATED_HPP
