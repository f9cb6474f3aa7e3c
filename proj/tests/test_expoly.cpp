#include "sgasym/expoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace sgasym;

namespace {

Rational small_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// A few terms with keys drawn from a small pool so that collisions and cancellations occur.
ExpPoly random_expoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> pick(0, 2);
  ExpPoly f;
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    GaussRational c(small_rational(rng, -5, 5, 3), pick(rng) == 0 ? small_rational(rng, -2, 2, 2) : Rational(0));
    Rational power = small_rational(rng, -3, 3, 2);
    GaussRational lin = pick(rng) == 0 ? GaussRational(Rational(1, 2)) : GaussRational(pick(rng) == 0 ? 1 : 0);
    GaussRational quad = pick(rng) == 0 ? GaussRational(Rational(-1, 2)) : GaussRational(0);
    f += ExpPoly::term(c, power, lin, quad);
  }
  return f;
}

// Numerical derivative of the evaluated function; independent of derive().
std::complex<long double> numeric_derivative(const ExpPoly& f, long double x) {
  const long double h = 1e-5L;
  return (f.evaluate(x - 2 * h) - 8.0L * f.evaluate(x - h) + 8.0L * f.evaluate(x + h) - f.evaluate(x + 2 * h)) /
         (12 * h);
}

}  // namespace

TEST(ExpPoly, DerivativeExamples) {
  EXPECT_EQ(ExpPoly::monomial(-1).derive(), ExpPoly::term(-1, -2));
  ExpPoly f = ExpPoly::term(1, Rational(1, 2), Rational(1, 2));
  ExpPoly expected = ExpPoly::term(Rational(1, 2), Rational(-1, 2), Rational(1, 2)) +
                     ExpPoly::term(Rational(1, 2), Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(f.derive(), expected);
  EXPECT_EQ(ExpPoly::exponential(0, Rational(-1, 2)).derive(), ExpPoly::term(-1, 1, 0, Rational(-1, 2)));
}

TEST(ExpPoly, ProductExamples) {
  EXPECT_EQ(ExpPoly::term(1, -1, 1) * ExpPoly::term(1, -2, 1), ExpPoly::term(1, -3, 2));
  EXPECT_TRUE((ExpPoly::monomial(3) * ExpPoly()).is_zero());
  EXPECT_EQ(ExpPoly::monomial(Rational(1, 2)) * ExpPoly::monomial(Rational(1, 2)), ExpPoly::monomial(1));
}

TEST(ExpPoly, TrigonometricIdentity) {
  ExpPoly s = ExpPoly::sin(1), c = ExpPoly::cos(1);
  EXPECT_EQ(s * s + c * c, ExpPoly(1));
  EXPECT_EQ(s.derive(), c);
  EXPECT_EQ(ExpPoly(2) * s * c, ExpPoly::sin(2));
  // stored as complex exponentials, but real-valued
  EXPECT_FALSE(s.is_real());
  EXPECT_NEAR(static_cast<double>(s.evaluate(0.7L).imag()), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(s.evaluate(0.7L).real()), std::sin(0.7), 1e-15);
}

TEST(ExpPoly, RingAxiomsOnRandomTermSets) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 150; ++k) {
    ExpPoly a = random_expoly(rng), b = random_expoly(rng), c = random_expoly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ExpPoly, LeibnizRule) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 150; ++k) {
    ExpPoly f = random_expoly(rng), g = random_expoly(rng);
    EXPECT_EQ((f * g).derive(), f.derive() * g + f * g.derive());
  }
}

TEST(ExpPoly, DerivativeMatchesNumericalDifferentiation) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    ExpPoly f = random_expoly(rng);
    for (long double x : {0.7L, 1.9L, 3.3L}) {
      auto exact = f.derive().evaluate(x);
      auto approx = numeric_derivative(f, x);
      EXPECT_NEAR(static_cast<double>(std::abs(exact - approx)), 0.0, 1e-6 * (1 + static_cast<double>(std::abs(exact))));
    }
  }
}

TEST(ExpPoly, ZeroTestAgreesWithSampling) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 50; ++k) {
    ExpPoly f = random_expoly(rng), g = random_expoly(rng);
    ExpPoly z = (f + g) * (f - g) - (f * f - g * g);
    ASSERT_TRUE(z.is_zero());
    for (int s = 0; s < 8; ++s) {
      long double x = small_rational(rng, 1, 99, 10).to_long_double();
      if (x <= 0 || x >= 10) x = 5;
      EXPECT_EQ(z.evaluate(x), std::complex<long double>(0));
    }
  }
}

TEST(ExpPoly, RenderParseRoundTrip) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    ExpPoly f = random_expoly(rng);
    EXPECT_EQ(ExpPoly::parse(f.render()), f) << f.render();
  }
  EXPECT_EQ(ExpPoly().render(), "0");
  EXPECT_EQ(ExpPoly::term(Rational(1, 2), Rational(-1, 2), Rational(1, 2)).render(),
            "(1/2)\xC2\xB7x^(-1/2)\xC2\xB7" "exp((1/2)x)");
}

TEST(ExpPoly, CanonicalOrderIsInsertionIndependent) {
  ExpPoly a = ExpPoly::term(1, 2) + ExpPoly::term(3, -1, 1) + ExpPoly::term(2, 0, 0, -1);
  ExpPoly b = ExpPoly::term(2, 0, 0, -1) + ExpPoly::term(1, 2) + ExpPoly::term(3, -1, 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.render(), b.render());
}
