#include "oracles.hpp"
#include "upext/families.hpp"
#include "upext/recurrence.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

using namespace upext;

namespace {

CoefficientSequence constant_u() { return chebyshev_coeffs(ChebyshevKind::U); }

/// A bounded random perturbation of the U recurrence, rational and reproducible per seed.
CoefficientSequence random_sequence(std::uint64_t seed) {
  auto b = [seed](std::size_t n) -> Rational {
    oracle::Rng rng(seed * 1000003 + 2 * n);
    return oracle::Rng(rng.next()).rational(-0.5, 0.5) / Rational(static_cast<long>(n + 1));
  };
  auto a2 = [seed](std::size_t n) -> Rational {
    oracle::Rng rng(seed * 1000003 + 2 * n + 1);
    return Rational(1, 4) + oracle::Rng(rng.next()).rational(0.01, 1.0) / Rational(static_cast<long>(n * n + 1));
  };
  return CoefficientSequence::from_exact(b, a2, "random");
}

}  // namespace

TEST(Shift, ZeroIsIdentityAndShiftsCompose) {
  const auto g = grosjean1_coeffs(Rational(-3, 10));
  const auto s0 = shift(g, 0);
  for (std::size_t n = 0; n < 20; ++n) {
    EXPECT_EQ(s0.b_exact(n), g.b_exact(n));
    EXPECT_EQ(shift(shift(g, 2), 3).a2_exact(n), shift(g, 5).a2_exact(n));
    EXPECT_EQ(shift(shift(g, 2), 3).b_exact(n), shift(g, 5).b_exact(n));
  }
}

TEST(Shift, AssociatedChebyshevTIsU) {
  const auto s = shift(chebyshev_coeffs(ChebyshevKind::T), 1);
  for (std::size_t n = 0; n < 50; ++n) {
    EXPECT_EQ(s.b_exact(n), Rational(0));
    if (n >= 1) {
      EXPECT_EQ(s.a2_exact(n), Rational(1, 4));
    }
  }
}

TEST(Shift, GrosjeanFirstKindAssociatedIsSecondKind) {
  for (const Rational& alpha : {Rational(-3, 10), Rational(-1, 2), Rational(-7, 10)}) {
    const auto s = shift(grosjean1_coeffs(alpha), 1);
    const auto g2 = grosjean2_coeffs(-alpha);
    for (std::size_t n = 0; n < 60; ++n) {
      EXPECT_EQ(s.b_exact(n), g2.b_exact(n));
      if (n >= 1) {
        EXPECT_EQ(s.a2_exact(n), g2.a2_exact(n));
      }
    }
  }
}

TEST(EvalMonic, Examples) {
  const auto u = eval_monic(constant_u(), 2, 1.0);
  ASSERT_EQ(u.values.size(), 3u);
  EXPECT_DOUBLE_EQ(u[0], 1.0);
  EXPECT_DOUBLE_EQ(u[1], 1.0);
  EXPECT_DOUBLE_EQ(u[2], 0.75);

  const auto t = eval_monic(grosjean1_coeffs(Rational(-1, 2)), 3, 0.3);
  const double expected[] = {1.0, 0.3, -0.41, -0.198};
  for (int k = 0; k <= 3; ++k) {
    EXPECT_NEAR(t[k], expected[k], 1e-15);
    EXPECT_NEAR(t[k], oracle::monic_T(k, 0.3), 1e-15);
  }
  EXPECT_EQ(eval_monic(constant_u(), 0, 0.7).values, std::vector<double>{1.0});
}

TEST(EvalMonic, MatchesChebyshevClosedForms) {
  for (double x : {-0.95, -0.3, 0.0, 0.41, 0.99}) {
    const auto t = eval_monic(chebyshev_coeffs(ChebyshevKind::T), 40, x);
    const auto u = eval_monic(chebyshev_coeffs(ChebyshevKind::U), 40, x);
    const auto v = eval_monic(chebyshev_coeffs(ChebyshevKind::V), 40, x);
    const auto w = eval_monic(chebyshev_coeffs(ChebyshevKind::W), 40, x);
    for (int k = 0; k <= 40; ++k) {
      const double s = std::ldexp(1.0, -k + 1);
      EXPECT_NEAR(t[k], oracle::monic_T(k, x), 1e-13 * s);
      EXPECT_NEAR(u[k], oracle::monic_U(k, x), 1e-12 * s);
      EXPECT_NEAR(v[k], oracle::monic_V(k, x), 1e-12 * s);
      EXPECT_NEAR(w[k], oracle::monic_W(k, x), 1e-12 * s);
    }
  }
}

TEST(EvalMonic, OverflowIsReportedNotReturned) {
  EXPECT_THROW(eval_monic(constant_u(), 5000, 50.0), std::overflow_error);
  EXPECT_THROW(eval_monic(constant_u(), kMaxDegree + 1, 0.0), std::invalid_argument);
}

TEST(EvalOrthonormal, Examples) {
  const auto p = eval_orthonormal(constant_u(), 12, 0.0);
  for (int k = 0; k <= 12; ++k) EXPECT_NEAR(p[k], k % 2 ? 0.0 : (k % 4 ? -1.0 : 1.0), 1e-14);
  EXPECT_EQ(eval_orthonormal(constant_u(), 0, 0.3).values, std::vector<double>{1.0});

  const auto g = grosjean1_coeffs(Rational(-3, 10));
  const auto mono = eval_monic(g, 5, 0.1);
  const auto orth = eval_orthonormal(g, 5, 0.1);
  const NormalizationLadder ladder(g);
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(orth[k], ladder.gamma(k) * mono[k], 1e-14);
}

TEST(EvalAssociated, IsShiftThenEvaluate) {
  const auto g = grosjean1_coeffs(Rational(-3, 10));
  const auto lhs = eval_associated(g, 1, 30, 0.5);
  const auto rhs = eval_monic(grosjean2_coeffs(Rational(3, 10)), 30, 0.5);
  for (int k = 0; k <= 30; ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-14);
  EXPECT_EQ(eval_associated(g, 0, 10, 0.2).values, eval_monic(g, 10, 0.2).values);
  const auto tu = eval_associated(chebyshev_coeffs(ChebyshevKind::T), 1, 20, -0.4);
  for (int k = 0; k <= 20; ++k) EXPECT_NEAR(tu[k], oracle::monic_U(k, -0.4), 1e-14);
}

TEST(ExpandMonic, Examples) {
  EXPECT_EQ(expand_monic(constant_u(), 3), RationalPolynomial({Rational(0), Rational(-1, 2), Rational(0), Rational(1)}));
  EXPECT_EQ(expand_monic(grosjean1_coeffs(Rational(-1, 2)), 2), RationalPolynomial({Rational(-1, 2), Rational(0), Rational(1)}));
  EXPECT_EQ(expand_monic(constant_u(), 0), RationalPolynomial::constant(Rational(1)));
  const CoefficientSequence real_only([](std::size_t) { return 0.0; }, [](std::size_t) { return 0.25; });
  EXPECT_THROW(expand_monic(real_only, 2), std::logic_error);
}

TEST(ExpandMonic, MatchesIntegerChebyshevRecurrences) {
  const auto t = expand_monic_all(chebyshev_coeffs(ChebyshevKind::T), 30);
  const auto v = expand_monic_all(chebyshev_coeffs(ChebyshevKind::V), 30);
  const auto to = oracle::chebyshev_exact(oracle::Kind::T, 30);
  const auto vo = oracle::chebyshev_exact(oracle::Kind::V, 30);
  for (int k = 0; k <= 30; ++k) {
    EXPECT_EQ(t[k], to[k]) << k;
    EXPECT_EQ(v[k], vo[k]) << k;
  }
}

TEST(Christoffel, ExamplesAndLimits) {
  EXPECT_DOUBLE_EQ(christoffel(grosjean1_coeffs(Rational(-3, 10)), 0, 0.4), 1.0);
  // orthonormal U_j(0)^2 = 1 for even j, 0 for odd: sum = n/2 + 1 for even n
  const std::size_t n = 20000;
  EXPECT_NEAR(static_cast<double>(n) * christoffel(constant_u(), n, 0.0), 2.0, 2e-3);
  // orthonormal T: p_0 = 1, p_j = sqrt(2) T_j, T_j(0)^2 = 1 for even j
  EXPECT_NEAR(static_cast<double>(n) * christoffel(chebyshev_coeffs(ChebyshevKind::T), n, 0.0), 1.0, 2e-3);
}

TEST(Christoffel, PositiveAndNonIncreasing) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_sequence(static_cast<std::uint64_t>(trial));
    const double x = rng.uniform(-1.2, 1.2);
    double prev = 2.0;
    for (std::size_t n = 0; n <= 60; ++n) {
      const double l = christoffel(seq, n, x);
      EXPECT_GT(l, 0.0);
      EXPECT_LE(l, prev);
      prev = l;
    }
  }
}

TEST(MixedSum, Examples) {
  const auto m = mixed_sum(constant_u(), 1, 0.5);
  EXPECT_NEAR(m.direct, 1.0, 1e-15);
  EXPECT_NEAR(m.christoffel_darboux, 1.0, 1e-14);
  EXPECT_THROW(mixed_sum(constant_u(), 0, 0.5), std::invalid_argument);

  // alpha = -1/2: cos(pi alpha) = 0, so the normalised sum tends to 0
  const std::size_t n = 20000;
  const auto t = mixed_sum(grosjean1_coeffs(Rational(-1, 2)), n, std::cos(1.0));
  EXPECT_NEAR(t.direct / static_cast<double>(n), 0.0, 1e-3);

  // U: p_k p^(1)_{k-1} = U_k U_{k-1} (standard U), whose average tends to x / (2 (1 - x^2))
  for (double x : {-0.6, 0.2, 0.7}) {
    const auto u = mixed_sum(constant_u(), n, x);
    EXPECT_NEAR(u.direct / static_cast<double>(n), x / (2.0 * (1.0 - x * x)), 2e-3) << x;
  }
}

TEST(MixedSum, TwoRoutesAgree) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto seq = trial % 2 ? grosjean1_coeffs(rng.rational(-0.95, -0.05)) : random_sequence(trial);
    const double x = rng.uniform(-0.99, 0.99);
    for (std::size_t n : {1u, 7u, 100u, 1000u}) {
      const auto m = mixed_sum(seq, n, x);
      EXPECT_NEAR(m.direct, m.christoffel_darboux, 1e-10 * std::max(1.0, std::abs(m.direct))) << trial << " " << n;
    }
  }
}

TEST(TraceClass, Examples) {
  EXPECT_EQ(trace_class_score(constant_u(), 500), 0.0);
  const auto t = chebyshev_coeffs(ChebyshevKind::T);
  EXPECT_DOUBLE_EQ(trace_class_score(t, 0), 1.0);
  EXPECT_DOUBLE_EQ(trace_class_score(t, 300), 1.0);
  const auto g = grosjean1_coeffs(Rational(-3, 10));
  double prev = 0.0, prev_inc = 1e9;
  for (std::size_t N = 1000; N <= 16000; N *= 2) {
    const double s = trace_class_score(g, N);
    EXPECT_GE(s, prev);
    const double inc = s - prev;
    if (N > 1000) {
      EXPECT_LT(inc, 0.6 * prev_inc);  // increments decay like 1/N
    }
    prev_inc = inc;
    prev = s;
  }
}

TEST(RecurrenceProperty, OrthonormalRelationHolds) {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq = random_sequence(static_cast<std::uint64_t>(100 + trial));
    const double x = rng.uniform(-1.1, 1.1);
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 300));
    const auto p = eval_orthonormal(seq, n, x);
    double scale = 0.0;
    for (double v : p.values) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 1; k < n; ++k) {
      const double res = seq.a(k + 1) * p[k + 1] + seq.b(k) * p[k] + seq.a(k) * p[k - 1] - x * p[k];
      ASSERT_LE(std::abs(res), 1e-12 * scale) << trial << " " << k;
    }
  }
}

TEST(RecurrenceProperty, GammaLadderExact) {
  for (const auto& seq : {grosjean1_coeffs(Rational(-3, 10)), random_sequence(3), chebyshev_coeffs(ChebyshevKind::T)}) {
    const NormalizationLadder ladder(seq);
    EXPECT_EQ(ladder.gamma_squared_exact(0), Rational(1));
    for (std::size_t n = 0; n < 40; ++n) {
      // (gamma_{n+1} a_{n+1})^2 = gamma_n^2
      EXPECT_EQ(ladder.gamma_squared_exact(n + 1) * seq.a2_exact(n + 1), ladder.gamma_squared_exact(n));
      EXPECT_NEAR(ladder.gamma(n + 1) * seq.a(n + 1), ladder.gamma(n), 1e-12 * ladder.gamma(n));
      EXPECT_NEAR(ladder.gamma1(n + 1), seq.a(1) * ladder.gamma(n + 1), 1e-12 * ladder.gamma1(n + 1));
    }
  }
}
