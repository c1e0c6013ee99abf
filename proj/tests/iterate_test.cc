#include <gtest/gtest.h>

#include <cmath>

#include "svbound/context.hpp"
#include "svbound/ensemble.hpp"
#include "svbound/errors.hpp"
#include "svbound/iterate.hpp"
#include "svbound/svd_oracle.hpp"

namespace svbound {
namespace {

// Recurrence values for diag(1,2) from a 40-digit mpmath evaluation.
constexpr double kLowerTrace[] = {0.25, 0.84210526315789474, 0.9620253164556962, 0.99059561128526646};
constexpr double kUpperTrace[] = {5.0, 4.6, 4.3545454545454545, 4.2070513477503331};

BoundContext diag12() { return build_context(ComplexMatrix::diagonal({1.0, 2.0})); }

IterationConfig custom_config(double seed) {
  IterationConfig c{SeedChoice::custom(seed)};
  c.tol_rel = 1e-12;
  return c;
}

TEST(LowerStep, HandEvaluated) {
  const BoundContext ctx = diag12();
  EXPECT_NEAR(lower_step(ctx, 0.25), kLowerTrace[1], 1e-15);
  EXPECT_NEAR(std::sqrt(lower_step(ctx, 0.25)), 0.9176629354822471, 1e-15);
  EXPECT_NEAR(lower_step(ctx, kLowerTrace[1]), kLowerTrace[2], 1e-15);
}

TEST(UpperStep, HandEvaluated) {
  const BoundContext ctx = diag12();
  EXPECT_NEAR(upper_step(ctx, 5.0), kUpperTrace[1], 1e-15);
  EXPECT_NEAR(upper_step(ctx, 4.6), kUpperTrace[2], 1e-15);
}

TEST(Steps, FixedPointAtExtremeEigenvalue) {
  const BoundContext ctx = diag12();
  EXPECT_EQ(lower_step(ctx, 1.0), 1.0);
  EXPECT_EQ(upper_step(ctx, 4.0), 4.0);

  const double sigma[] = {3.0, 2.0, 1.0};
  const BoundContext dense = build_context(synth_matrix(sigma, 8).matrix);
  EXPECT_NEAR(lower_step(dense, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(upper_step(dense, 9.0), 9.0, 1e-11);
}

TEST(Steps, DenominatorGuards) {
  const BoundContext ctx = diag12();
  // S - (n-1) lambda <= 0 for lambda >= 5.
  EXPECT_THROW(lower_step(ctx, 5.0), DomainError);
  // (n+1) lambda - S <= 0 for lambda <= 5/3.
  EXPECT_THROW(upper_step(ctx, 1.5), DomainError);
}

TEST(RunLower, CustomSeedTrace) {
  const ConvergenceTrace t = run_lower(diag12(), custom_config(0.5));
  ASSERT_GE(t.iterations(), 4u);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(t.iterates[k].lambda, kLowerTrace[k], 1e-14);
    EXPECT_EQ(t.iterates[k].k, static_cast<std::size_t>(k + 1));
    EXPECT_EQ(t.iterates[k].a, std::sqrt(t.iterates[k].lambda));
  }
  EXPECT_EQ(t.direction, Direction::lower);
  EXPECT_NE(t.status, IterationStatus::max_iter);
  EXPECT_NEAR(t.final_bound, 1.0, 1e-9);
  EXPECT_LE(t.final_bound, 1.0);
}

TEST(RunLower, IdentityConvergesImmediately) {
  const ConvergenceTrace t = run_lower(build_context(ComplexMatrix::identity(3)), default_config(Direction::lower));
  EXPECT_EQ(t.iterations(), 1u);
  EXPECT_NE(t.status, IterationStatus::max_iter);
  EXPECT_NEAR(t.final_bound, 1.0, 1e-12);
}

TEST(RunLower, DiagonalOneTwoThree) {
  const BoundContext ctx = build_context(ComplexMatrix::diagonal({1.0, 2.0, 3.0}));
  const ConvergenceTrace t = run_lower(ctx, default_config(Direction::lower));
  EXPECT_NEAR(t.iterates.front().a, 0.91117880764624303, 1e-11);
  for (std::size_t k = 0; k + 1 < t.iterations(); ++k) {
    EXPECT_LE(t.iterates[k].lambda, t.iterates[k + 1].lambda);
  }
  for (const auto& e : t.iterates) EXPECT_LE(e.a, 1.0 + 1e-12);
  EXPECT_NEAR(t.final_bound, 1.0, 1e-9);
}

TEST(RunUpper, DiagonalOneTwo) {
  const ConvergenceTrace t = run_upper(diag12(), default_config(Direction::upper));
  ASSERT_GE(t.iterations(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(t.iterates[k].lambda, kUpperTrace[k], 1e-14);
  EXPECT_NEAR(t.final_bound, 2.0, 1e-9);
  EXPECT_GE(t.final_bound, 2.0);
}

TEST(RunUpper, IdentityAndOneTwoThree) {
  // sigma_max^2 is a triple eigenvalue of I_3, so the correction vanishes
  // like (lambda - 1)^3 and the approach is sublinear: still a valid,
  // monotone bound, but the cap is reached long before 1e-9.
  const ConvergenceTrace id = run_upper(build_context(ComplexMatrix::identity(3)), default_config(Direction::upper));
  EXPECT_EQ(id.iterates.front().lambda, 3.0);
  EXPECT_EQ(id.status, IterationStatus::max_iter);
  EXPECT_GE(id.final_bound, 1.0);
  EXPECT_NEAR(id.final_bound, 1.0, 1e-3);
  for (std::size_t k = 0; k + 1 < id.iterations(); ++k) {
    EXPECT_GE(id.iterates[k].lambda, id.iterates[k + 1].lambda);
  }

  const ConvergenceTrace t =
      run_upper(build_context(ComplexMatrix::diagonal({1.0, 2.0, 3.0})), default_config(Direction::upper));
  EXPECT_EQ(t.iterates.front().lambda, 14.0);
  for (std::size_t k = 0; k + 1 < t.iterations(); ++k) {
    EXPECT_GE(t.iterates[k].lambda, t.iterates[k + 1].lambda);
  }
  for (const auto& e : t.iterates) EXPECT_GE(e.a, 3.0 - 1e-12);
  EXPECT_NEAR(t.final_bound, 3.0, 1e-9);
}

TEST(Run, ExactEigenvalueHitStalls) {
  // Seeding exactly at sigma_min^2 of a diagonal matrix gives an exact zero
  // determinant on the first step.
  const ConvergenceTrace t = run_lower(diag12(), custom_config(1.0));
  EXPECT_EQ(t.status, IterationStatus::stalled_zero_correction);
  EXPECT_EQ(t.iterations(), 1u);
  EXPECT_EQ(t.iterates[0].correction, 0.0);
  EXPECT_EQ(t.final_bound, 1.0);
}

TEST(Run, MaxIterIsAStatus) {
  IterationConfig c = custom_config(0.5);
  c.max_iter = 3;
  const ConvergenceTrace t = run_lower(diag12(), c);
  EXPECT_EQ(t.status, IterationStatus::max_iter);
  EXPECT_EQ(t.iterations(), 3u);
  EXPECT_NEAR(t.final_lambda, kLowerTrace[3], 1e-14);
}

TEST(Run, SeedsMustMatchDirection) {
  const BoundContext ctx = diag12();
  EXPECT_THROW(run_lower(ctx, IterationConfig{SeedChoice(SeedKind::frobenius)}), DomainError);
  EXPECT_THROW(run_upper(ctx, IterationConfig{SeedChoice(SeedKind::lin_xie)}), DomainError);
  EXPECT_THROW(run_upper(ctx, custom_config(1.1)), DomainError);  // (n+1) lambda < S
}

TEST(Run, ConfigValidation) {
  IterationConfig c = default_config(Direction::lower);
  c.tol_rel = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  c.tol_abs = 1e-12;
  EXPECT_NO_THROW(c.validate());
  c.max_iter = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c.max_iter = 1;
  c.tol_abs = -1.0;
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(Run, ContractionFactors) {
  const ConvergenceTrace t = run_lower(diag12(), custom_config(0.5));
  const auto f = contraction_factors(t);
  ASSERT_FALSE(f.empty());
  for (double r : f) {
    EXPECT_GT(r, 0.0);
    EXPECT_LT(r, 1.0);
  }
}

struct Ensemble {
  SpectrumSample sample;
  BoundContext ctx;
};

Ensemble draw(Xoshiro256& rng) {
  const std::size_t n = rng.uniform_int(2, 8);
  SpectrumSample s = synth_matrix(random_spectrum(n, 1.0 + 4.0 * rng.uniform(), rng), rng());
  BoundContext ctx = build_context(s.matrix);
  return {std::move(s), std::move(ctx)};
}

TEST(Properties, SandwichAndLimit) {
  Xoshiro256 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    const Ensemble e = draw(rng);
    const double smin = e.sample.sigma.sigma_min(), smax = e.sample.sigma.sigma_max();
    const std::vector<double> eig = jacobi_hermitian_eigen(e.ctx.gram);
    const auto nearest = [&](double lambda) {
      double best = INFINITY;
      for (double x : eig) best = std::min(best, std::abs(lambda - x));
      return best;
    };

    const ConvergenceTrace lo = run_lower(e.ctx, default_config(Direction::lower));
    double prev = 0.0;
    for (const auto& it : lo.iterates) {
      EXPECT_GE(it.a, prev);
      EXPECT_LE(it.a, smin * (1 + 1e-9));
      prev = it.a;
    }
    EXPECT_LE(lo.final_bound, smin * (1 + 1e-9));
    if (lo.status != IterationStatus::max_iter) EXPECT_LE(nearest(lo.final_lambda), 1e-6 * e.ctx.frob_sq);

    const ConvergenceTrace up = run_upper(e.ctx, default_config(Direction::upper));
    prev = INFINITY;
    for (const auto& it : up.iterates) {
      EXPECT_LE(it.a, prev);
      EXPECT_GE(it.a, smax * (1 - 1e-9));
      prev = it.a;
    }
    EXPECT_GE(up.final_bound, smax * (1 - 1e-9));
    if (up.status != IterationStatus::max_iter) EXPECT_LE(nearest(up.final_lambda), 1e-6 * e.ctx.frob_sq);
  }
}

TEST(Properties, SeedDominanceAndStrictFirstStep) {
  Xoshiro256 rng(556);
  for (int trial = 0; trial < 40; ++trial) {
    const Ensemble e = draw(rng);
    for (SeedKind kind : {SeedKind::yu_gu, SeedKind::zou, SeedKind::lin_xie}) {
      IterationConfig c{SeedChoice(kind)};
      c.max_iter = 200;
      const ConvergenceTrace t = run_lower(e.ctx, c);
      const double seed = std::sqrt(seed_lambda(e.ctx, SeedChoice(kind), Direction::lower));
      EXPECT_GE(t.final_bound, seed);
      if (seed < e.sample.sigma.sigma_min() * (1 - 1e-6)) {
        ASSERT_GE(t.iterations(), 1u);
        EXPECT_GT(t.iterates[0].correction, 0.0);
      }
    }
  }
}

}  // namespace
}  // namespace svbound
