#include "oracles.hpp"
#include "upext/ode4.hpp"

#include <gtest/gtest.h>

using namespace upext;

namespace {

using Poly = RationalPolynomial;

Poly poly(std::initializer_list<Rational> c) { return Poly(c); }
Poly constant(const Rational& c) { return Poly::constant(c); }

const std::vector<Rational> kPoints = {Rational(0), Rational(1, 3), Rational(-2, 5), Rational(1, 7), Rational(3, 4)};

Poly anti_poly(const CoefficientSequence& base, const ExtensionParams& p, std::size_t m) {
  return expand_monic(extend(base, p), m);
}

ExtensionParams random_params(oracle::Rng& rng, std::size_t r) {
  std::vector<Rational> b, a2;
  for (std::size_t i = 0; i < r; ++i) {
    b.push_back(rng.rational(-1, 1));
    a2.push_back(rng.rational(0.05, 2));
  }
  return ExtensionParams(b, a2);
}

}  // namespace

TEST(L2Operator, AnnihilatesChebyshevT3) {
  const auto op = l2_operator(jacobi_operator(Rational(-1, 2), Rational(-1, 2), 3));
  EXPECT_EQ(op, PolyOperator({constant(Rational(9)), poly({Rational(0), Rational(-1)}), poly({Rational(1), Rational(0), Rational(-1)})}));
  EXPECT_TRUE(op.apply(poly({Rational(0), Rational(-3, 4), Rational(0), Rational(1)})).is_zero());
}

TEST(Adjoint, Identities) {
  const auto legendre = jacobi_operator(Rational(0), Rational(0), 4);
  const auto L = l2_operator(legendre);
  EXPECT_EQ(adjoint(L, legendre.sigma, legendre.tau), L);

  const auto g = classical_operator(GrosjeanKind::first, Rational(-3, 10), 5);
  const auto Lg = l2_operator(g);
  const Poly tau_star = g.sigma.derivative() * Rational(2) - g.tau;
  EXPECT_EQ(adjoint(adjoint(Lg, g.sigma, g.tau), g.sigma, tau_star), Lg);
  EXPECT_THROW(adjoint(PolyOperator({Poly(), Poly(), Poly(), constant(Rational(1))}), g.sigma, g.tau), std::invalid_argument);
}

TEST(R2Operator, Forms) {
  const auto g = classical_operator(GrosjeanKind::first, Rational(-7, 10), 3);
  const Poly drift = g.sigma.derivative() * Rational(2) - g.tau;
  const Rational k = g.sigma.derivative(2).coeff(0) * Rational(4) / 2 + g.tau.derivative().coeff(0) * 4;
  const auto one = r2_operator(g.sigma, g.tau, 3, constant(Rational(1)));
  EXPECT_EQ(one, PolyOperator({constant(-k), drift, g.sigma}));
  const auto three = r2_operator(g.sigma, g.tau, 3, constant(Rational(3)));
  EXPECT_EQ(three, constant(Rational(9)) * one);
  EXPECT_THROW(r2_operator(g.sigma, g.tau, 3, Poly()), std::invalid_argument);

  const Poly B = poly({Rational(1, 2), Rational(-2), Rational(1)});
  const auto R = r2_operator(g.sigma, g.tau, 3, B);
  for (const auto& c : R.coefficients()) EXPECT_LE(c.degree(), 2 + 2 * B.degree());
}

TEST(R2Operator, KillsBTimesAdjointKernel) {
  // L_2^* u = 0 for u = P^(1)_{n-1} of a Grosjean first-kind base
  const Rational alpha(-3, 10);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto g = classical_operator(GrosjeanKind::first, alpha, n);
    const Poly u = expand_monic(shift(grosjean1_coeffs(alpha), 1), n - 1);
    EXPECT_TRUE(adjoint(l2_operator(g), g.sigma, g.tau).apply(u).is_zero());
    const Poly B = poly({Rational(2, 3), Rational(-1, 5)});
    EXPECT_TRUE(r2_operator(g.sigma, g.tau, n, B).apply(B * u).is_zero());
  }
}

TEST(ReduceModL2, Examples) {
  const auto g = classical_operator(GrosjeanKind::first, Rational(-3, 10), 4);
  EXPECT_EQ(reduce_mod_l2(Poly(), Poly(), constant(Rational(1)), g.sigma, g.tau, g.lambda),
            (FirstOrderForm{constant(Rational(1)), Poly()}));
  EXPECT_EQ(reduce_mod_l2(g.sigma, Poly(), Poly(), g.sigma, g.tau, g.lambda),
            (FirstOrderForm{constant(-g.lambda), -g.tau}));
  EXPECT_THROW(reduce_mod_l2(constant(Rational(1)), Poly(), Poly(), g.sigma, g.tau, g.lambda), std::domain_error);
}

TEST(DeriveChain, Examples) {
  const auto g = classical_operator(GrosjeanKind::first, Rational(-7, 10), 3);
  EXPECT_EQ(derive_chain({constant(Rational(1)), Poly()}, g.sigma, g.tau, g.lambda), (FirstOrderForm{Poly(), g.sigma}));
}

TEST(DeriveChain, MatchesDifferentiation) {
  oracle::Rng rng(55);
  const Rational alpha(-3, 10);
  const auto seq = grosjean1_coeffs(alpha);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto g = classical_operator(GrosjeanKind::first, alpha, n);
    const Poly P = expand_monic(seq, n);
    for (int trial = 0; trial < 2; ++trial) {
      const FirstOrderForm f{poly({rng.rational(-1, 1), rng.rational(-1, 1)}), poly({rng.rational(-1, 1), rng.rational(-1, 1), rng.rational(-1, 1)})};
      const FirstOrderForm next = derive_chain(f, g.sigma, g.tau, g.lambda);
      const Poly lhs = g.sigma * (f.M * P + f.N * P.derivative()).derivative();
      EXPECT_EQ(lhs, next.M * P + next.N * P.derivative()) << "n=" << n;
      for (int k = 0; k < 20; ++k) {
        const Rational x = rng.rational(-1, 1);
        EXPECT_EQ(lhs(x), next.M(x) * P(x) + next.N(x) * P.derivative()(x));
      }
    }
  }
}

TEST(FourthOrder, Examples) {
  struct Case {
    Rational alpha;
    ExtensionParams params;
    unsigned n;
  };
  const std::vector<Case> cases = {
      {Rational(-3, 10), ExtensionParams({Rational(1, 10)}, {Rational(2, 5)}), 4},
      {Rational(-7, 10), ExtensionParams({Rational(1, 5), Rational(-1, 3)}, {Rational(1, 2), Rational(3, 10)}), 3},
      {Rational(-3, 10), ExtensionParams({Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 4)}), 5},
  };
  for (const auto& c : cases) {
    const auto ode = fourth_order_ode(c.alpha, c.params, c.n);
    EXPECT_EQ(ode.order(), 4);
    EXPECT_EQ(ode.coeff(4).leading(), Rational(1));
    const auto seq = grosjean1_coeffs(c.alpha);
    const std::size_t m = c.n + c.params.order();
    const Poly y = anti_poly(seq, c.params, m);
    for (const auto& x : kPoints) EXPECT_EQ(ode.residual(y, x), Rational(0));
    EXPECT_TRUE(ode.op.apply(y).is_zero());
    bool next_nonzero = false, prev_nonzero = false;
    for (const auto& x : kPoints) {
      next_nonzero = next_nonzero || ode.residual(anti_poly(seq, c.params, m + 1), x) != 0;
      prev_nonzero = prev_nonzero || ode.residual(anti_poly(seq, c.params, m - 1), x) != 0;
    }
    EXPECT_TRUE(next_nonzero);
    EXPECT_TRUE(prev_nonzero);
  }
  EXPECT_THROW(fourth_order_ode(Rational(-1, 2), ExtensionParams({Rational(0)}, {Rational(1)}), 3), std::invalid_argument);
  EXPECT_THROW(fourth_order_ode(Rational(1, 2), ExtensionParams({Rational(0)}, {Rational(1)}), 3), std::invalid_argument);
}

TEST(FourthOrder, KernelContainsBothSummands) {
  oracle::Rng rng(808);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational alpha = rng.rational(-0.9, -0.1);
    if (alpha == Rational(-1, 2)) continue;
    const auto p = random_params(rng, static_cast<std::size_t>(rng.integer(1, 2)));
    const unsigned n = static_cast<unsigned>(rng.integer(1, 5));
    const auto ode = fourth_order_ode(alpha, p, n);
    const QLadder q(p);
    const std::size_t r = p.order();
    const auto seq = grosjean1_coeffs(alpha);
    const Poly B = q.poly(r - 1) * Rational(-p.a0_squared_exact());
    EXPECT_TRUE(ode.op.apply(q.poly(r) * expand_monic(seq, n)).is_zero());
    EXPECT_TRUE(ode.op.apply(B * expand_monic(shift(seq, 1), n - 1)).is_zero());
  }
}

TEST(FourthOrder, GrosjeanSecondKindBase) {
  const Rational alpha(3, 10);
  const auto p = ExtensionParams({Rational(1, 4)}, {Rational(2, 3)});
  for (unsigned n = 1; n <= 4; ++n) {
    const auto ode = fourth_order_ode(classical_operator(GrosjeanKind::second, alpha, n), p);
    EXPECT_TRUE(ode.op.apply(anti_poly(grosjean2_coeffs(alpha), p, n + 1)).is_zero()) << "n=" << n;
  }
}

TEST(SecondOrder, ChebyshevCases) {
  const auto t = ExtensionParams({Rational(0)}, {Rational(1, 2)});
  for (unsigned n = 1; n <= 6; ++n) {
    const Rational k(static_cast<long>(n + 1));
    const auto op = second_order_ode(ChebyshevBase::U, t, n);
    EXPECT_EQ(op, PolyOperator({constant(-k * k), poly({Rational(0), Rational(1)}), poly({Rational(-1), Rational(0), Rational(1)})}));
  }
  oracle::Rng rng(12);
  const auto T = chebyshev_coeffs(ChebyshevKind::T);
  const auto U = chebyshev_coeffs(ChebyshevKind::U);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = random_params(rng, static_cast<std::size_t>(rng.integer(1, 3)));
    const std::size_t r = p.order();
    for (unsigned n : {1u, 3u}) {
      EXPECT_TRUE(second_order_ode(ChebyshevBase::T, p, n).apply(anti_poly(T, p, n + r)).is_zero());
      EXPECT_TRUE(second_order_ode(ChebyshevBase::U, p, n).apply(anti_poly(U, p, n + r)).is_zero());
    }
  }
  const auto p = ExtensionParams({Rational(1, 3)}, {Rational(5, 4)});
  const auto op = second_order_ode(ChebyshevBase::T, p, 4);
  EXPECT_EQ(op.order(), 2);
  EXPECT_EQ(op.apply_at(anti_poly(T, p, 5), Rational(1, 7)), Rational(0));
  EXPECT_NE(op.apply_at(anti_poly(T, p, 6), Rational(1, 7)), Rational(0));
  EXPECT_THROW(second_order_ode(ChebyshevBase::T, p, 0), std::invalid_argument);
}

TEST(Normalize, Canonical) {
  const auto ode = fourth_order_ode(Rational(-3, 10), ExtensionParams({Rational(1, 10)}, {Rational(2, 5)}), 4);
  EXPECT_EQ(normalize(ode.op), ode.op);
  EXPECT_EQ(normalize(poly({Rational(2), Rational(-7, 3)}) * ode.op), ode.op);
  EXPECT_EQ(normalize(PolyOperator()), PolyOperator());
}
