#ifndef UPEXT_RECURRENCE_HPP
#define UPEXT_RECURRENCE_HPP

#include "upext/polynomial.hpp"
#include "upext/rational.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace upext {

/// Degrees beyond this are rejected by every floating evaluation.
inline constexpr std::size_t kMaxDegree = 1'000'000;

/**
 * Recurrence coefficients (b_n, a_n^2) of a monic orthogonal polynomial family
 *
 *     P_{n+1}(x) = (x - b_n) P_n(x) - a_n^2 P_{n-1}(x),   P_{-1} = 0, P_0 = 1.
 *
 * Coefficients are pure functions of the index, so the family has no degree
 * bound. Families that are rational in n also carry exact accessors, which
 * the symbolic (rational) operations require.
 *
 * a2(0) is reported as 0: it only ever multiplies P_{-1}.
 *
 * Copies share the underlying generator; shift() only moves an offset, so
 * shift(shift(s, r), q) and shift(s, r + q) are the same object up to identity.
 */
class CoefficientSequence {
 public:
  using RealFn = std::function<double(std::size_t)>;
  using ExactFn = std::function<Rational(std::size_t)>;

  CoefficientSequence(RealFn b, RealFn a2, ExactFn b_exact = {}, ExactFn a2_exact = {}, std::string label = {})
      : src_(std::make_shared<Source>(Source{std::move(b), std::move(a2), std::move(b_exact), std::move(a2_exact),
                                             std::move(label)})) {
    if (!src_->b || !src_->a2) throw std::invalid_argument("coefficient sequence needs real accessors");
  }

  /// Sequence with exact accessors only; the real ones are derived from them.
  static CoefficientSequence from_exact(ExactFn b_exact, ExactFn a2_exact, std::string label = {}) {
    auto b = [f = b_exact](std::size_t n) { return to_double(f(n)); };
    auto a2 = [f = a2_exact](std::size_t n) { return to_double(f(n)); };
    return CoefficientSequence(b, a2, std::move(b_exact), std::move(a2_exact), std::move(label));
  }

  double b(std::size_t n) const { return src_->b(n + offset_); }
  double a2(std::size_t n) const { return n == 0 ? 0.0 : src_->a2(n + offset_); }
  double a(std::size_t n) const { return std::sqrt(a2(n)); }

  bool has_exact() const { return static_cast<bool>(src_->b_exact) && static_cast<bool>(src_->a2_exact); }
  Rational b_exact(std::size_t n) const {
    require_exact();
    return src_->b_exact(n + offset_);
  }
  Rational a2_exact(std::size_t n) const {
    require_exact();
    return n == 0 ? Rational(0) : src_->a2_exact(n + offset_);
  }

  std::size_t offset() const { return offset_; }
  std::string label() const {
    return offset_ == 0 ? src_->label : src_->label + "^(" + std::to_string(offset_) + ")";
  }

  /// Associated sequence of order r: b'(n) = b(n + r), a2'(n) = a2(n + r).
  friend CoefficientSequence shift(const CoefficientSequence& seq, std::size_t r) {
    CoefficientSequence out = seq;
    out.offset_ += r;
    return out;
  }

 private:
  struct Source {
    RealFn b, a2;
    ExactFn b_exact, a2_exact;
    std::string label;
  };

  void require_exact() const {
    if (!has_exact()) throw std::logic_error("sequence '" + src_->label + "' has no exact coefficients");
  }

  std::shared_ptr<const Source> src_;
  std::size_t offset_ = 0;
};

/// Values [P_0(x), ..., P_n(x)] (or the orthonormal p_k) at one point.
struct EvaluationVector {
  double x = 0.0;
  std::vector<double> values;

  std::size_t degree() const { return values.size() - 1; }
  double back() const { return values.back(); }
  double operator[](std::size_t k) const { return values[k]; }
};

namespace detail {

inline void check_degree(std::size_t n) {
  if (n > kMaxDegree) throw std::invalid_argument("degree " + std::to_string(n) + " exceeds the supported maximum");
}

inline void check_finite(double v, std::size_t k) {
  if (!std::isfinite(v)) throw std::overflow_error("recurrence overflowed at degree " + std::to_string(k));
}

}  // namespace detail

/// Monic values P_0..P_n at x by the forward recurrence.
inline EvaluationVector eval_monic(const CoefficientSequence& seq, std::size_t n, double x) {
  detail::check_degree(n);
  EvaluationVector out{x, std::vector<double>(n + 1)};
  double prev = 0.0, cur = 1.0;
  out.values[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    double next = (x - seq.b(k)) * cur - seq.a2(k) * prev;
    detail::check_finite(next, k + 1);
    prev = cur;
    cur = next;
    out.values[k + 1] = cur;
  }
  return out;
}

/// Orthonormal values p_0..p_n, from x p_k = a_{k+1} p_{k+1} + b_k p_k + a_k p_{k-1}.
inline EvaluationVector eval_orthonormal(const CoefficientSequence& seq, std::size_t n, double x) {
  detail::check_degree(n);
  EvaluationVector out{x, std::vector<double>(n + 1)};
  double prev = 0.0, cur = 1.0;
  double a_cur = 0.0;
  out.values[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a_next = seq.a(k + 1);
    double next = ((x - seq.b(k)) * cur - a_cur * prev) / a_next;
    detail::check_finite(next, k + 1);
    prev = cur;
    cur = next;
    a_cur = a_next;
    out.values[k + 1] = cur;
  }
  return out;
}

/// Associated polynomials of order r: eval_monic(shift(seq, r), n, x).
inline EvaluationVector eval_associated(const CoefficientSequence& seq, std::size_t r, std::size_t n, double x) {
  return eval_monic(shift(seq, r), n, x);
}

/// Orthonormal values together with their first derivatives.
struct OrthonormalWithDerivative {
  EvaluationVector values;
  std::vector<double> derivatives;
};

inline OrthonormalWithDerivative eval_orthonormal_derivative(const CoefficientSequence& seq, std::size_t n, double x) {
  detail::check_degree(n);
  OrthonormalWithDerivative out{{x, std::vector<double>(n + 1)}, std::vector<double>(n + 1)};
  double p_prev = 0.0, p_cur = 1.0, d_prev = 0.0, d_cur = 0.0, a_cur = 0.0;
  out.values.values[0] = 1.0;
  out.derivatives[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a_next = seq.a(k + 1);
    const double xb = x - seq.b(k);
    double p_next = (xb * p_cur - a_cur * p_prev) / a_next;
    double d_next = (p_cur + xb * d_cur - a_cur * d_prev) / a_next;
    detail::check_finite(p_next, k + 1);
    detail::check_finite(d_next, k + 1);
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
    a_cur = a_next;
    out.values.values[k + 1] = p_cur;
    out.derivatives[k + 1] = d_cur;
  }
  return out;
}

/// Exact expansion of every monic P_0..P_n.
inline std::vector<RationalPolynomial> expand_monic_all(const CoefficientSequence& seq, std::size_t n) {
  if (!seq.has_exact()) throw std::logic_error("expand_monic needs a sequence with exact coefficients");
  std::vector<RationalPolynomial> polys;
  polys.reserve(n + 1);
  polys.push_back(RationalPolynomial::constant(Rational(1)));
  const RationalPolynomial x = RationalPolynomial::x();
  for (std::size_t k = 0; k < n; ++k) {
    RationalPolynomial next = (x - RationalPolynomial::constant(seq.b_exact(k))) * polys[k];
    if (k > 0) next -= polys[k - 1] * seq.a2_exact(k);
    polys.push_back(std::move(next));
  }
  return polys;
}

inline RationalPolynomial expand_monic(const CoefficientSequence& seq, std::size_t n) {
  return expand_monic_all(seq, n).back();
}

/// gamma_n = (a_1 ... a_n)^{-1} and gamma_n^{(1)} = a_1 gamma_n.
class NormalizationLadder {
 public:
  explicit NormalizationLadder(CoefficientSequence seq) : seq_(std::move(seq)) {}

  double gamma(std::size_t n) const {
    double g = 1.0;
    for (std::size_t k = 1; k <= n; ++k) g /= seq_.a(k);
    return g;
  }
  double gamma1(std::size_t n) const { return n == 0 ? 1.0 : seq_.a(1) * gamma(n); }

  /// gamma_n^2 = (a_1^2 ... a_n^2)^{-1}, exact.
  Rational gamma_squared_exact(std::size_t n) const {
    Rational g(1);
    for (std::size_t k = 1; k <= n; ++k) g /= seq_.a2_exact(k);
    return g;
  }

 private:
  CoefficientSequence seq_;
};

/// Christoffel function lambda_n(x) = (sum_{j<=n} p_j(x)^2)^{-1}.
inline double christoffel(const CoefficientSequence& seq, std::size_t n, double x) {
  const auto p = eval_orthonormal(seq, n, x);
  double s = 0.0;
  for (double v : p.values) s += v * v;
  return 1.0 / s;
}

/// Both routes to sum_{k=1}^n p_k(x) p_{k-1}^{(1)}(x).
struct MixedSum {
  double direct = 0.0;
  double christoffel_darboux = 0.0;  // a_{n+1}[p'_{n+1} p^{(1)}_{n-1} - p'_n p^{(1)}_n]
};

inline MixedSum mixed_sum(const CoefficientSequence& seq, std::size_t n, double x) {
  if (n < 1) throw std::invalid_argument("mixed_sum needs n >= 1");
  const auto p = eval_orthonormal_derivative(seq, n + 1, x);
  const auto p1 = eval_orthonormal(shift(seq, 1), n, x);
  MixedSum out;
  for (std::size_t k = 1; k <= n; ++k) out.direct += p.values[k] * p1[k - 1];
  out.christoffel_darboux = seq.a(n + 1) * (p.derivatives[n + 1] * p1[n - 1] - p.derivatives[n] * p1[n]);
  return out;
}

/// Partial sum sum_{k=0}^{N} (|1 - 4 a_{k+1}^2| + 2|b_k|).
inline double trace_class_score(const CoefficientSequence& seq, std::size_t N) {
  double s = 0.0;
  for (std::size_t k = 0; k <= N; ++k) s += std::abs(1.0 - 4.0 * seq.a2(k + 1)) + 2.0 * std::abs(seq.b(k));
  return s;
}

}  // namespace upext

#endif  // UPEXT_RECURRENCE_HPP
