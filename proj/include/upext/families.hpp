#ifndef UPEXT_FAMILIES_HPP
#define UPEXT_FAMILIES_HPP

#include "upext/polynomial.hpp"
#include "upext/rational.hpp"
#include "upext/recurrence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace upext {

enum class ChebyshevKind { T, U, V, W };
enum class GrosjeanKind { first, second };

/// Grosjean parameter; the first kind needs -1 < alpha < 0, the second -1 < alpha < 2.
struct GrosjeanParam {
  Rational alpha;
  GrosjeanKind kind = GrosjeanKind::first;

  GrosjeanParam(Rational a, GrosjeanKind k) : alpha(std::move(a)), kind(k) {
    const bool ok = kind == GrosjeanKind::first ? (alpha > -1 && alpha < 0) : (alpha > -1 && alpha < 2);
    if (!ok)
      throw std::invalid_argument("Grosjean alpha " + to_string(alpha) + " out of range for the " +
                                  (kind == GrosjeanKind::first ? "first" : "second") + " kind");
  }
};

/**
 * Monic Jacobi recurrence for the weight (1-x)^alpha (1+x)^beta, alpha, beta > -1.
 *
 * b_0 and a_1^2 use dedicated formulas: the generic ones contain 0/0 factors
 * when alpha + beta is 0 or -1.
 */
inline CoefficientSequence jacobi_coeffs(const Rational& alpha, const Rational& beta) {
  if (!(alpha > -1) || !(beta > -1))
    throw std::invalid_argument("Jacobi parameters must exceed -1 (got " + to_string(alpha) + ", " + to_string(beta) + ")");
  auto b_exact = [alpha, beta](std::size_t n) -> Rational {
    const Rational s = alpha + beta;
    if (n == 0) return Rational((beta - alpha) / (s + 2));
    const Rational t = 2 * Rational(static_cast<long>(n)) + s;
    return Rational((beta * beta - alpha * alpha) / (t * (t + 2)));
  };
  auto a2_exact = [alpha, beta](std::size_t n) -> Rational {
    const Rational s = alpha + beta;
    if (n == 0) return Rational(0);
    if (n == 1) return Rational(4 * (1 + alpha) * (1 + beta) / ((2 + s) * (2 + s) * (3 + s)));
    const Rational m(static_cast<long>(n));
    const Rational t = 2 * m + s;
    return Rational(4 * m * (m + alpha) * (m + beta) * (m + s) / (t * t * (t * t - 1)));
  };
  const double a = to_double(alpha), b = to_double(beta);
  auto b_real = [a, b](std::size_t n) {
    const double s = a + b;
    if (n == 0) return (b - a) / (s + 2.0);
    const double t = 2.0 * static_cast<double>(n) + s;
    return (b * b - a * a) / (t * (t + 2.0));
  };
  auto a2_real = [a, b](std::size_t n) {
    const double s = a + b;
    if (n == 0) return 0.0;
    if (n == 1) return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    const double m = static_cast<double>(n);
    const double t = 2.0 * m + s;
    return 4.0 * m * (m + a) * (m + b) * (m + s) / (t * t * (t * t - 1.0));
  };
  return CoefficientSequence(b_real, a2_real, b_exact, a2_exact,
                             "jacobi(" + to_string(alpha) + "," + to_string(beta) + ")");
}

/**
 * Grosjean polynomials of the first kind G_n^alpha (Jacobi with beta = -1 - alpha):
 *
 *     b_n = (2 alpha + 1) / (4n^2 - 1)                    n >= 0
 *     a_1^2 = -2 alpha (1 + alpha)
 *     a_n^2 = (n + alpha)(n - 1 - alpha) / (2n - 1)^2     n >= 2
 */
inline CoefficientSequence grosjean1_coeffs(const Rational& alpha) {
  GrosjeanParam param(alpha, GrosjeanKind::first);
  auto b_exact = [alpha](std::size_t n) -> Rational {
    const Rational m(static_cast<long>(n));
    return Rational((2 * alpha + 1) / (4 * m * m - 1));
  };
  auto a2_exact = [alpha](std::size_t n) -> Rational {
    if (n == 0) return Rational(0);
    if (n == 1) return Rational(-2 * alpha * (1 + alpha));
    const Rational m(static_cast<long>(n));
    return Rational((m + alpha) * (m - 1 - alpha) / ((2 * m - 1) * (2 * m - 1)));
  };
  const double a = to_double(alpha);
  auto b_real = [a](std::size_t n) {
    const double m = static_cast<double>(n);
    return (2.0 * a + 1.0) / (4.0 * m * m - 1.0);
  };
  auto a2_real = [a](std::size_t n) {
    if (n == 0) return 0.0;
    if (n == 1) return -2.0 * a * (1.0 + a);
    const double m = static_cast<double>(n);
    return (m + a) * (m - 1.0 - a) / ((2.0 * m - 1.0) * (2.0 * m - 1.0));
  };
  return CoefficientSequence(b_real, a2_real, b_exact, a2_exact, "grosjean1(" + to_string(alpha) + ")");
}

/**
 * Grosjean polynomials of the second kind g_n^alpha (Jacobi with beta = 1 - alpha):
 *
 *     b_n = (1 - 2 alpha) / (4(n+1)^2 - 1),   a_n^2 = (n + alpha)(n + 1 - alpha) / (2n + 1)^2.
 */
inline CoefficientSequence grosjean2_coeffs(const Rational& alpha) {
  GrosjeanParam param(alpha, GrosjeanKind::second);
  auto b_exact = [alpha](std::size_t n) -> Rational {
    const Rational m(static_cast<long>(n + 1));
    return Rational((1 - 2 * alpha) / (4 * m * m - 1));
  };
  auto a2_exact = [alpha](std::size_t n) -> Rational {
    if (n == 0) return Rational(0);
    const Rational m(static_cast<long>(n));
    return Rational((m + alpha) * (m + 1 - alpha) / ((2 * m + 1) * (2 * m + 1)));
  };
  const double a = to_double(alpha);
  auto b_real = [a](std::size_t n) {
    const double m = static_cast<double>(n + 1);
    return (1.0 - 2.0 * a) / (4.0 * m * m - 1.0);
  };
  auto a2_real = [a](std::size_t n) {
    if (n == 0) return 0.0;
    const double m = static_cast<double>(n);
    return (m + a) * (m + 1.0 - a) / ((2.0 * m + 1.0) * (2.0 * m + 1.0));
  };
  return CoefficientSequence(b_real, a2_real, b_exact, a2_exact, "grosjean2(" + to_string(alpha) + ")");
}

inline CoefficientSequence grosjean_coeffs(const GrosjeanParam& p) {
  return p.kind == GrosjeanKind::first ? grosjean1_coeffs(p.alpha) : grosjean2_coeffs(p.alpha);
}

/// Monic Chebyshev families of the four kinds; all share a^2 = 1/4 from n = 2 on.
inline CoefficientSequence chebyshev_coeffs(ChebyshevKind kind) {
  Rational b0(0), a1sq(1, 4);
  std::string label = "U";
  switch (kind) {
    case ChebyshevKind::U: break;
    case ChebyshevKind::T: a1sq = Rational(1, 2); label = "T"; break;
    case ChebyshevKind::V: b0 = Rational(-1, 2); label = "V"; break;
    case ChebyshevKind::W: b0 = Rational(1, 2); label = "W"; break;
  }
  auto b_exact = [b0](std::size_t n) { return n == 0 ? b0 : Rational(0); };
  auto a2_exact = [a1sq](std::size_t n) { return n == 0 ? Rational(0) : n == 1 ? a1sq : Rational(1, 4); };
  const double b0d = to_double(b0), a1d = to_double(a1sq);
  auto b_real = [b0d](std::size_t n) { return n == 0 ? b0d : 0.0; };
  auto a2_real = [a1d](std::size_t n) { return n == 0 ? 0.0 : n == 1 ? a1d : 0.25; };
  return CoefficientSequence(b_real, a2_real, b_exact, a2_exact, label);
}

namespace detail {

inline void require_open_interval(double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::domain_error("weight evaluated outside (-1, 1)");
}

}  // namespace detail

/// w_G(x) = sin(-pi alpha)/pi ((1-x)/(1+x))^alpha / (1+x), a probability density on (-1, 1).
inline double grosjean1_weight(double alpha, double x) {
  if (!(alpha > -1.0 && alpha < 0.0)) throw std::invalid_argument("grosjean1_weight needs -1 < alpha < 0");
  detail::require_open_interval(x);
  return std::sin(-std::numbers::pi * alpha) / std::numbers::pi * std::pow((1.0 - x) / (1.0 + x), alpha) / (1.0 + x);
}

/**
 * w_g(x) = C(alpha) ((1-x)/(1+x))^alpha (1+x) normalised to unit mass, with
 * C(alpha) = sin(pi alpha) / (2 alpha (1 - alpha) pi). The removable
 * singularities at alpha = 0 and alpha = 1 evaluate to 1/2.
 */
inline double grosjean2_weight(double alpha, double x) {
  if (!(alpha > -1.0 && alpha < 2.0)) throw std::invalid_argument("grosjean2_weight needs -1 < alpha < 2");
  detail::require_open_interval(x);
  double c;
  if (std::abs(alpha) < 1e-8 || std::abs(alpha - 1.0) < 1e-8) {
    c = 0.5;
  } else {
    c = std::sin(std::numbers::pi * alpha) / (2.0 * alpha * (1.0 - alpha) * std::numbers::pi);
  }
  return c * std::pow((1.0 - x) / (1.0 + x), alpha) * (1.0 + x);
}

/// Hypergeometric operator sigma D^2 + tau D + lambda_n of a classical family at fixed degree n.
struct ClassicalOperator {
  RationalPolynomial sigma;
  RationalPolynomial tau;
  unsigned n = 0;
  Rational lambda;

  /// lambda_m = -m[(m-1) sigma'' + 2 tau'] / 2.
  Rational lambda_for(unsigned m) const {
    const Rational mm(static_cast<long>(m));
    const Rational s2 = sigma.derivative(2).coeff(0);
    const Rational t1 = tau.derivative().coeff(0);
    return Rational(-mm * ((mm - 1) * s2 + 2 * t1) / 2);
  }
};

/// Operator of the monic Jacobi family: sigma = 1 - x^2, tau = beta - alpha - (alpha + beta + 2) x.
inline ClassicalOperator jacobi_operator(const Rational& alpha, const Rational& beta, unsigned n) {
  ClassicalOperator op;
  op.sigma = RationalPolynomial{Rational(1), Rational(0), Rational(-1)};
  op.tau = RationalPolynomial{Rational(beta - alpha), Rational(-(alpha + beta + 2))};
  op.n = n;
  op.lambda = op.lambda_for(n);
  return op;
}

/**
 * L_{G,alpha,n} = (1-x^2) D^2 + (-1 - 2alpha - x) D + n^2 for the first kind and
 * L_{g,alpha,n} = (1-x^2) D^2 + (1 - 2alpha - 3x) D + n(n+2) for the second.
 */
inline ClassicalOperator classical_operator(GrosjeanKind kind, const Rational& alpha, unsigned n) {
  GrosjeanParam param(alpha, kind);
  return kind == GrosjeanKind::first ? jacobi_operator(alpha, -1 - alpha, n) : jacobi_operator(alpha, 1 - alpha, n);
}

/**
 * Leading term of sqrt(n pi) P_n^{(alpha,beta)}(cos theta) for the standard
 * Jacobi normalisation:
 *
 *     sin(theta/2)^{-alpha-1/2} cos(theta/2)^{-beta-1/2}
 *       cos([n + (alpha+beta+1)/2] theta - (alpha + 1/2) pi / 2).
 *
 * The remainder is O(1/n) uniformly on closed subintervals of (0, pi).
 */
inline double darboux_asymptotic(double alpha, double beta, double n, double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw std::domain_error("darboux_asymptotic needs 0 < theta < pi");
  const double phase = (n + (alpha + beta + 1.0) / 2.0) * theta - (alpha + 0.5) * std::numbers::pi / 2.0;
  return std::pow(std::sin(theta / 2.0), -alpha - 0.5) * std::pow(std::cos(theta / 2.0), -beta - 0.5) *
         std::cos(phase);
}

}  // namespace upext

#endif  // UPEXT_FAMILIES_HPP
