#ifndef UPEXT_ODE4_HPP
#define UPEXT_ODE4_HPP

#include "upext/anti_associated.hpp"
#include "upext/families.hpp"
#include "upext/polynomial.hpp"
#include "upext/rational.hpp"
#include "upext/recurrence.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace upext {

/// Linear differential operator c_k D^k + ... + c_1 D + c_0 with polynomial coefficients.
class PolyOperator {
 public:
  PolyOperator() = default;
  explicit PolyOperator(std::vector<RationalPolynomial> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyOperator identity() { return PolyOperator({RationalPolynomial::constant(Rational(1))}); }

  /// Highest k with c_k != 0; -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RationalPolynomial>& coefficients() const { return c_; }
  RationalPolynomial coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RationalPolynomial(); }

  RationalPolynomial apply(const RationalPolynomial& y) const {
    RationalPolynomial out, dy = y;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out += c_[k] * dy;
      dy = dy.derivative();
    }
    return out;
  }

  /// Value of (this y)(x), with the derivatives of y taken exactly.
  Rational apply_at(const RationalPolynomial& y, const Rational& x) const { return apply(y)(x); }

  /// f * this.
  friend PolyOperator operator*(const RationalPolynomial& f, const PolyOperator& op) {
    std::vector<RationalPolynomial> c;
    for (const auto& ck : op.c_) c.push_back(f * ck);
    return PolyOperator(std::move(c));
  }

  friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b) {
    std::vector<RationalPolynomial> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return PolyOperator(std::move(c));
  }
  friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b) {
    return a + RationalPolynomial::constant(Rational(-1)) * b;
  }

  /// D o this: sum_k (c_k' D^k + c_k D^{k+1}).
  PolyOperator differentiated() const {
    std::vector<RationalPolynomial> c(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      c[k] += c_[k].derivative();
      c[k + 1] += c_[k];
    }
    return PolyOperator(std::move(c));
  }

  /// sigma D o this.
  PolyOperator sigma_d(const RationalPolynomial& sigma) const { return sigma * differentiated(); }

  friend bool operator==(const PolyOperator&, const PolyOperator&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<RationalPolynomial> c_;
};

/// sigma D^2 + tau D + lambda_n.
inline PolyOperator l2_operator(const ClassicalOperator& op) {
  return PolyOperator({RationalPolynomial::constant(op.lambda), op.tau, op.sigma});
}

/// L* = L + 2(sigma' - tau) D + sigma'' - tau' for L = sigma D^2 + tau D + c.
inline PolyOperator adjoint(const PolyOperator& op, const RationalPolynomial& sigma, const RationalPolynomial& tau) {
  if (op.order() > 2) throw std::invalid_argument("adjoint is defined here for second-order operators only");
  const RationalPolynomial ds = sigma.derivative();
  return PolyOperator({op.coeff(0) + sigma.derivative(2) - tau.derivative(), op.coeff(1) + (ds - tau) * Rational(2),
                       op.coeff(2)});
}

/**
 * B^3 L_2^* B^{-1} written out:
 *
 *     sigma B^2 D^2 + [(2 sigma' - tau) B^2 - 2 sigma B B'] D
 *       + 2 sigma B'^2 - sigma B B'' - (2 sigma' - tau) B B'
 *       - [sigma'' (n^2 - n - 2)/2 + tau' (n + 1)] B^2.
 *
 * It kills B u whenever L_2^* u = 0.
 */
inline PolyOperator r2_operator(const RationalPolynomial& sigma, const RationalPolynomial& tau, unsigned n,
                                const RationalPolynomial& B) {
  if (B.is_zero()) throw std::invalid_argument("r2_operator needs a nonzero B");
  const Rational nn(static_cast<long>(n));
  const Rational s2 = sigma.derivative(2).coeff(0);
  const Rational t1 = tau.derivative().coeff(0);
  const RationalPolynomial dB = B.derivative(), ddB = B.derivative(2);
  const RationalPolynomial drift = sigma.derivative() * Rational(2) - tau;
  const RationalPolynomial BB = B * B;
  const Rational k = s2 * (nn * nn - nn - 2) / 2 + t1 * (nn + 1);
  return PolyOperator({sigma * dB * dB * Rational(2) - sigma * B * ddB - drift * B * dB - BB * k,
                       drift * BB - sigma * B * dB * Rational(2), sigma * BB});
}

/// A pair (M, N) standing for M P + N P'.
struct FirstOrderForm {
  RationalPolynomial M;
  RationalPolynomial N;

  friend bool operator==(const FirstOrderForm&, const FirstOrderForm&) = default;
};

/**
 * Rewrites e2 P'' + e1 P' + e0 P as M P + N P' using sigma P'' = -tau P' - lambda P.
 * e2 must be a multiple of sigma; anything else throws.
 */
inline FirstOrderForm reduce_mod_l2(const RationalPolynomial& e2, const RationalPolynomial& e1,
                                    const RationalPolynomial& e0, const RationalPolynomial& sigma,
                                    const RationalPolynomial& tau, const Rational& lambda) {
  RationalPolynomial h;
  try {
    h = exact_div(e2, sigma);
  } catch (const std::domain_error&) {
    throw std::domain_error("reduce_mod_l2: P'' coefficient is not a multiple of sigma");
  }
  return {e0 - h * lambda, e1 - tau * h};
}

/// sigma (M P + N P')' rewritten as M_next P + N_next P'.
inline FirstOrderForm derive_chain(const FirstOrderForm& f, const RationalPolynomial& sigma,
                                   const RationalPolynomial& tau, const Rational& lambda) {
  return {sigma * f.M.derivative() - f.N * lambda, sigma * (f.M + f.N.derivative()) - tau * f.N};
}

/// Divides every coefficient by their common polynomial factor and makes the top one monic.
inline PolyOperator normalize(const PolyOperator& op) {
  if (op.order() < 0) return op;
  RationalPolynomial g;
  for (const auto& c : op.coefficients()) g = gcd(g, c);
  std::vector<RationalPolynomial> out;
  for (const auto& c : op.coefficients()) out.push_back(exact_div(c, g));
  const Rational lead = out.back().leading();
  for (auto& c : out) c *= Rational(1 / lead);
  return PolyOperator(std::move(out));
}

/**
 * Given an operator R with R y = M_0 P + N_0 P' for y in the solution family,
 * eliminates P and P' from
 *
 *     | R y                 M_0  N_0 |
 *     | sigma (R y)'        M_1  N_1 | = 0
 *     | sigma (sigma(R y)')' M_2  N_2 |
 *
 * by expanding along the first column with the minors M_i N_j - M_j N_i.
 */
inline PolyOperator eliminate(const PolyOperator& R, const FirstOrderForm& f0, const RationalPolynomial& sigma,
                              const RationalPolynomial& tau, const Rational& lambda) {
  const FirstOrderForm f1 = derive_chain(f0, sigma, tau, lambda);
  const FirstOrderForm f2 = derive_chain(f1, sigma, tau, lambda);
  auto minor = [](const FirstOrderForm& a, const FirstOrderForm& b) { return a.M * b.N - b.M * a.N; };
  const PolyOperator R1 = R.sigma_d(sigma);
  const PolyOperator R2 = R1.sigma_d(sigma);
  return minor(f1, f2) * R - minor(f0, f2) * R1 + minor(f0, f1) * R2;
}

/// Coefficients c_0..c_4 of the fourth-order equation satisfied by one anti-associated polynomial.
struct FourthOrderODE {
  PolyOperator op;

  int order() const { return op.order(); }
  RationalPolynomial coeff(std::size_t k) const { return op.coeff(k); }
  /// The exact residual (op y)(x).
  Rational residual(const RationalPolynomial& y, const Rational& x) const { return op.apply_at(y, x); }
};

/**
 * Fourth-order equation for P^(-r)_{n+r} = Q_r P_n + B P^(1)_{n-1},
 * B = -a_0^2 Q_{r-1}, over a classical base with operator `base`.
 *
 * Uses L_2^* P^(1)_{n-1} = (sigma'' - 2 tau') P_n', so that
 * R_2 y = R_2[Q_r P_n] + (sigma'' - 2 tau') B^3 P_n'.
 */
inline FourthOrderODE fourth_order_ode(const ClassicalOperator& base, const ExtensionParams& params) {
  if (base.n < 1) throw std::invalid_argument("fourth_order_ode needs n >= 1");
  const QLadder ladder(params);
  const std::size_t r = params.order();
  const RationalPolynomial& Q = ladder.poly(r);
  const RationalPolynomial B = ladder.poly(r - 1) * Rational(-params.a0_squared_exact());
  const PolyOperator R = r2_operator(base.sigma, base.tau, base.n, B);

  const RationalPolynomial c2 = R.coeff(2), c1 = R.coeff(1), c0 = R.coeff(0);
  const RationalPolynomial dQ = Q.derivative(), ddQ = Q.derivative(2);
  const Rational inhom = base.sigma.derivative(2).coeff(0) - 2 * base.tau.derivative().coeff(0);
  const RationalPolynomial e2 = c2 * Q;
  const RationalPolynomial e1 = c2 * dQ * Rational(2) + c1 * Q + B * B * B * inhom;
  const RationalPolynomial e0 = c2 * ddQ + c1 * dQ + c0 * Q;
  const FirstOrderForm f0 = reduce_mod_l2(e2, e1, e0, base.sigma, base.tau, base.lambda);

  FourthOrderODE ode{normalize(eliminate(R, f0, base.sigma, base.tau, base.lambda))};
  if (ode.order() != 4)
    throw std::logic_error("fourth_order_ode: elimination produced order " + std::to_string(ode.order()));
  return ode;
}

/// Grosjean first-kind base of parameter alpha, degree n of the base family.
inline FourthOrderODE fourth_order_ode(const Rational& alpha, const ExtensionParams& params, unsigned n) {
  if (!(alpha > -1 && alpha < 0)) throw std::invalid_argument("fourth_order_ode needs -1 < alpha < 0");
  if (alpha == Rational(-1, 2))
    throw std::invalid_argument("alpha = -1/2 degenerates to a second-order equation; use second_order_ode");
  return fourth_order_ode(classical_operator(GrosjeanKind::first, alpha, n), params);
}

/// Chebyshev bases for which P^(1)_{n-1} is a first-order expression in P_n.
enum class ChebyshevBase { T, U };

/**
 * Second-order equation for P^(-r)_{n+r} = A_0 P_n + B_0 P_n' over a Chebyshev
 * base, where the associated polynomial is rewritten through the base:
 *
 *     T: P^(1)_{n-1} = P_n' / n
 *     U: P^(1)_{n-1} = 2 [(1 - x^2) P_n' + n x P_n] / (n + 1)     (monic).
 */
inline PolyOperator second_order_ode(ChebyshevBase base, const ExtensionParams& params, unsigned n) {
  if (n < 1) throw std::invalid_argument("second_order_ode needs n >= 1");
  const QLadder ladder(params);
  const std::size_t r = params.order();
  const RationalPolynomial& Q = ladder.poly(r);
  const RationalPolynomial B = ladder.poly(r - 1) * Rational(-params.a0_squared_exact());
  const Rational nn(static_cast<long>(n));
  const RationalPolynomial sigma{Rational(1), Rational(0), Rational(-1)};

  RationalPolynomial tau, acoef, bcoef;
  Rational lambda;
  if (base == ChebyshevBase::T) {
    tau = RationalPolynomial{Rational(0), Rational(-1)};
    lambda = nn * nn;
    bcoef = RationalPolynomial::constant(Rational(1 / nn));
  } else {
    tau = RationalPolynomial{Rational(0), Rational(-3)};
    lambda = nn * (nn + 2);
    acoef = RationalPolynomial{Rational(0), Rational(2 * nn / (nn + 1))};
    bcoef = sigma * Rational(2 / (nn + 1));
  }
  const FirstOrderForm f0{Q + B * acoef, B * bcoef};
  return normalize(eliminate(PolyOperator::identity(), f0, sigma, tau, lambda));
}

}  // namespace upext

#endif  // UPEXT_ODE4_HPP
