#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "wavelift/families.hpp"
#include "wavelift/spectral.hpp"

using namespace wavelift;
using std::numbers::pi;

TEST(Symbol, Examples) {
  const Filter haar_h(0, {0.5, 0.5});
  EXPECT_NEAR(std::abs(eval_symbol(haar_h, 0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_symbol(haar_h, pi)), 0.0, 1e-15);
  const Complex v = eval_symbol(Filter(0, {0.25, 0.5, 0.25}), pi / 2);
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), -0.5, 1e-15);
}

TEST(Symbol, MatchesDirectSumAndIsPeriodic) {
  const Filter f = cdf_spline(3, 5).dual();
  for (int i = 0; i < 64; ++i) {
    const double w = -7.0 + 0.23 * i;
    EXPECT_LT(std::abs(eval_symbol(f, w) - oracle::symbol(f, w)), 1e-14);
    EXPECT_LT(std::abs(eval_symbol(f, w) - eval_symbol(f, w + 2 * pi)), 1e-12);
  }
}

TEST(SFactor, Examples) {
  EXPECT_NEAR(std::abs(s_factor(1, pi) - Complex(2.0, 0.0)), 0.0, 1e-15);
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(std::abs(s_factor(s, 0.0)), 0.0);
  EXPECT_NEAR(std::abs(s_factor(2, pi / 2) - Complex(0.0, 2.0)), 0.0, 1e-15);
}

TEST(ElevatedSymbol, AgreesWithElevatedFilter) {
  const TrigSymbol m0(haar().primal());
  const auto up = binomial_elevate_primal(haar().primal(), ElevationOrder(1));
  for (int i = 0; i < 1024; ++i) {
    const double w = grid_frequency(i, 1024);
    EXPECT_LT(std::abs(elevated_symbol_primal(m0, 1, w) - oracle::symbol(up, w)), 1e-12);
    EXPECT_LT(std::abs(elevated_symbol_primal(m0, 0, w) - m0(w)), 1e-15);
  }
  EXPECT_NEAR(std::abs(elevated_symbol_primal(m0, 1, 0.0) - 1.0), 0.0, 1e-15);
}

TEST(PrResidual, Examples) {
  EXPECT_LT(pr_residual(haar()), 1e-15);
  EXPECT_LT(pr_residual(cdf_spline(2, 2)), 1e-12);
  const auto h = cdf_spline(2, 2).primal();
  EXPECT_GT(pr_residual(FilterBank("mismatch", h, h)), 0.1);
}

TEST(ScalingFourier, Examples) {
  const Filter f = cdf_spline(2, 4).primal();
  EXPECT_NEAR(std::abs(scaling_fourier(f, 0.0) - 1.0), 0.0, 1e-15);
  EXPECT_LT(std::abs(scaling_fourier(haar().primal(), 2 * pi)), 1e-6);
  EXPECT_NEAR(std::abs(scaling_fourier(haar().primal(), pi)), 2.0 / pi, 1e-6);
}

TEST(Gamma, HaarIsOneWithEnoughAliasTerms) {
  // sum_{|k|<=K} sinc^2 misses a tail of about 1/(pi^2 K); K = 256 keeps it under 2e-3.
  const auto g = gamma(haar().primal(), 256, kDefaultProductDepth, 256);
  EXPECT_NEAR(g.lower_bound, 1.0, 2e-3);
  EXPECT_NEAR(g.upper_bound, 1.0, 2e-3);
  EXPECT_FALSE(g.non_riesz);
}

TEST(Gamma, HatMatchesPoissonSum) {
  const auto g = gamma(Filter(0, {0.25, 0.5, 0.25}));
  ASSERT_EQ(g.values.size(), 1024u);
  for (std::size_t i = 0; i < g.values.size(); ++i) EXPECT_NEAR(g.values[i], oracle::hat_gamma(g.grid[i]), 2e-3);
  EXPECT_NEAR(g.lower_bound, 1.0 / 3.0, 2e-3);
  EXPECT_NEAR(g.upper_bound, 1.0, 2e-3);
  EXPECT_LE(g.lower_bound, g.upper_bound);
}

TEST(Gamma, DeltaIsNonRiesz) {
  const auto g = gamma(Filter(0, {1.0}));
  EXPECT_TRUE(g.non_riesz);
}

TEST(Gamma, OrthonormalDaubechiesIsOne) {
  const auto g = gamma(daubechies(4).primal());
  EXPECT_NEAR(g.lower_bound, 1.0, 2e-3);
  EXPECT_NEAR(g.upper_bound, 1.0, 2e-3);
}

TEST(OrthonormalityDeviation, Examples) {
  EXPECT_LT(orthonormality_deviation(haar().primal()), 1e-12);
  EXPECT_NEAR(orthonormality_deviation(Filter(0, {0.25, 0.5, 0.25})), 0.5, 1e-12);
  EXPECT_LT(orthonormality_deviation(daubechies(4).primal()), 1e-9);
}

TEST(SymbolIdentities, HoldForCdfTwoTwo) {
  const auto bank = cdf_spline(2, 2);
  for (int s = 1; s <= 2; ++s) {
    const auto r = symbol_identity_residuals(bank, elevate(bank, ElevationOrder(s)), s);
    EXPECT_LT(r.max(), 1e-10) << "s=" << s;
  }
}

TEST(SymbolIdentities, DetectAWrongDual) {
  const auto bank = cdf_spline(2, 2);
  const auto up = elevate(bank, ElevationOrder(1));
  const FilterBank wrong("wrong", up.primal(), up.dual().shifted(1));
  EXPECT_GT(symbol_identity_residuals(bank, wrong, 1).dual_lowpass, 0.1);
}
