#include "sgasym/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sgasym;

namespace {

// Independent floating-point evaluation of the level formula.
double level_double(double C, double D, int n, int sign) {
  double den = (2 * n + 1) + sign * std::sqrt(1 - 4 * C);
  return -D * D / (den * den);
}

}  // namespace

TEST(ToAbc, Examples) {
  EXPECT_EQ(to_abc({Rational(-3, 4), Rational(1, 2), Rational(-1, 4)}), (SGACoefficients{Rational(-15, 4), -1, 2}));
  EXPECT_EQ(to_abc({Rational(3, 16), 0, 0}), (SGACoefficients{0, 0, 0}));
  EXPECT_EQ(to_abc({0, 1, Rational(-1, 4)}), (SGACoefficients{Rational(-3, 4), -1, 4}));
  EXPECT_THROW(to_abc({0, 1, std::nullopt}), std::invalid_argument);
}

TEST(DiscreteEnergy, Examples) {
  EXPECT_EQ(discrete_energy(Rational(-3, 4), 1, 1, Branch::minus).E_hat, Algebraic(-1));
  EXPECT_EQ(discrete_energy(-2, 1, 2, Branch::minus).E_hat, Algebraic(Rational(-1, 4)));
  EXPECT_EQ(discrete_energy(0, 1, 0, Branch::plus).E_hat, Algebraic(Rational(-1, 4)));
}

TEST(DiscreteEnergy, Errors) {
  EXPECT_THROW(discrete_energy(1, 1, 0, Branch::plus), std::domain_error);
  EXPECT_THROW(discrete_energy(0, 0, 0, Branch::plus), std::domain_error);
  EXPECT_THROW(discrete_energy(0, -1, 0, Branch::plus), std::domain_error);
  EXPECT_THROW(discrete_energy(Rational(-3, 4), 1, 0, Branch::minus), std::domain_error);
  EXPECT_THROW(discrete_energy(0, 1, -1, Branch::plus), std::invalid_argument);
}

TEST(DiscreteEnergy, IrrationalLevelsHaveTightEnclosures) {
  EnergyLevel lv = discrete_energy(Rational(1, 8), 1, 0, Branch::plus);
  EXPECT_FALSE(lv.E_hat.is_rational());
  auto [lo, hi] = lv.E_hat.enclosure(Rational(1, 1000000000000LL));
  EXPECT_LE(hi - lo, Rational(1, 1000000000000LL));
  double ref = level_double(0.125, 1, 0, 1);
  EXPECT_LE(lo.to_double(), ref + 1e-15);
  EXPECT_GE(hi.to_double(), ref - 1e-15);
  EXPECT_LT(lv.E_hat.sign(), 0);
}

TEST(DiscreteEnergy, MatchesFloatingFormula) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-40, 4), den(1, 16), dn(1, 9), nn(0, 6);
  for (int k = 0; k < 100; ++k) {
    Rational C(num(rng), den(rng));
    if (C > Rational(1, 4)) continue;
    Rational D(dn(rng), den(rng));
    int n = nn(rng);
    for (Branch br : {Branch::plus, Branch::minus}) {
      int sign = br == Branch::plus ? 1 : -1;
      double denom = (2 * n + 1) + sign * std::sqrt(1 - 4 * C.to_double());
      if (denom <= 1e-9) {
        if (denom < -1e-9) EXPECT_THROW(discrete_energy(C, D, n, br), std::domain_error);
        continue;
      }
      double ref = level_double(C.to_double(), D.to_double(), n, sign);
      EXPECT_NEAR(discrete_energy(C, D, n, br).E_hat.to_double(), ref, 1e-12 * std::abs(ref));
    }
  }
}

TEST(DiscreteEnergy, ScalingCovariance) {
  for (const Rational& C : {Rational(0), Rational(-3, 4), Rational(1, 8), Rational(-5)}) {
    for (const Rational& lambda : {Rational(2), Rational(3, 7)}) {
      for (int n = 0; n < 4; ++n) {
        Algebraic e1 = discrete_energy(C, 1, n, Branch::plus).E_hat;
        Algebraic e2 = discrete_energy(C, lambda, n, Branch::plus).E_hat;
        EXPECT_EQ(e2, Algebraic(lambda * lambda) * e1);
      }
    }
  }
}

TEST(DiscreteEnergy, PlusBranchMonotone) {
  for (const Rational& C : {Rational(0), Rational(-3, 4), Rational(1, 8)}) {
    for (int n = 0; n < 6; ++n) {
      EXPECT_LT(discrete_energy(C, 1, n, Branch::plus).E_hat, discrete_energy(C, 1, n + 1, Branch::plus).E_hat);
    }
  }
}

TEST(DiscreteEnergy, BranchConsistencyLaw) {
  for (int N = 1; N <= 8; ++N) {
    for (const Rational& D : {Rational(1), Rational(5, 3)}) {
      Algebraic e = discrete_energy(Rational(-N * (N + 2), 4), D, N, Branch::minus).E_hat;
      EXPECT_EQ(e, Algebraic(-D * D / Rational(N * N)));
    }
  }
}

TEST(Quantization, Examples) {
  EXPECT_TRUE(quantization_residual({Rational(-15, 4), -1, 2}, 1, Branch::minus).is_zero());
  EXPECT_TRUE(quantization_residual({Rational(-3, 4), -1, 4}, 0, Branch::plus).is_zero());
  EXPECT_EQ(quantization_residual({0, -1, 0}, 0, Branch::plus), Algebraic(3));
  EXPECT_THROW(quantization_residual({0, 0, 1}, 0, Branch::plus), std::domain_error);
}

TEST(Quantization, RoundTripOverRationalLevels) {
  // C = (1 - k^2)/4 makes sqrt(1 - 4C) = k rational.
  for (int k = 0; k <= 6; ++k) {
    Rational C(1 - k * k, 4);
    for (const Rational& D : {Rational(1), Rational(2, 3)}) {
      for (int n = 0; n < 5; ++n) {
        for (Branch br : {Branch::plus, Branch::minus}) {
          if (br == Branch::minus && 2 * n + 1 - k <= 0) continue;
          EnergyLevel lv = discrete_energy(C, D, n, br);
          ASSERT_TRUE(lv.E_hat.is_rational());
          EXPECT_TRUE(quantization_residual(to_abc({C, D, lv.E_hat.rational_value()}), n, br).is_zero());
        }
      }
    }
  }
}

TEST(Tilt, Examples) {
  Tilt t = tilt_theta(-1, TiltMode::discrete);
  EXPECT_EQ(t.tanh_theta, Rational(15, 17));
  EXPECT_TRUE(t.admissible);
  t = tilt_theta(0, TiltMode::discrete);
  EXPECT_EQ(t.tanh_theta, Rational(-1));
  EXPECT_FALSE(t.admissible);
  t = tilt_theta(-1, TiltMode::continuous);
  EXPECT_EQ(t.tanh_theta, Rational(17, 15));
  EXPECT_FALSE(t.admissible);
  EXPECT_THROW(tilt_theta(Rational(1, 16), TiltMode::discrete), std::domain_error);
  EXPECT_THROW(tilt_theta(Rational(-1, 16), TiltMode::continuous), std::domain_error);
}

TEST(ContinuousLambda, Examples) {
  EXPECT_EQ(continuous_lambda(-1, 2), Algebraic(Rational(-1, 2)));
  EXPECT_EQ(continuous_lambda(-1, 0), Algebraic(0));
  EXPECT_EQ(continuous_lambda(-4, 4), Algebraic(Rational(-1, 2)));
  EXPECT_THROW(continuous_lambda(0, 1), std::domain_error);
}

TEST(Branch, Parse) {
  EXPECT_EQ(parse_branch("plus"), Branch::plus);
  EXPECT_EQ(parse_branch("minus"), Branch::minus);
  EXPECT_THROW(parse_branch("both"), std::invalid_argument);
}
