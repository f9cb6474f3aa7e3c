#include "sgasym/family.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sgasym;

namespace {

const std::vector<Rational> kPs{3, 2, 1, Rational(1, 2), Rational(2, 3), Rational(1, 3)};

// Ground state of u'' + (1/x - 1/4) u = 0 carried to s = sqrt(x): R(s) = s^{3/2} e^{-s^2/2}.
double ground_R(double s) { return std::pow(s, 1.5) * std::exp(-s * s / 2); }

}  // namespace

TEST(Transform, PEqualsThree) {
  SGACoefficients co{Rational(-3, 4), -1, 4};
  GeneralizedProblem gp = transform_problem(co, 3);
  EXPECT_EQ(gp.inv_square, -2 + 9 * co.a);
  ASSERT_EQ(gp.power_terms.size(), 2u);
  EXPECT_EQ(gp.power_terms[0], (PowerTerm{9 * co.b, 10}));
  EXPECT_EQ(gp.power_terms[1], (PowerTerm{9 * co.c, 4}));
  EXPECT_EQ(gp.wf_exponent, Rational(1));
}

TEST(Transform, IdentityAtPEqualsOne) {
  SGACoefficients co{Rational(2, 7), Rational(-5), Rational(1, 3)};
  GeneralizedProblem gp = transform_problem(co, 1);
  EXPECT_EQ(gp.inv_square, co.a);
  EXPECT_EQ(gp.power_terms[0], (PowerTerm{co.b, 2}));
  EXPECT_EQ(gp.power_terms[1], (PowerTerm{co.c, 0}));
  EXPECT_EQ(gp.wf_exponent, Rational(0));
}

TEST(Transform, PEqualsTwoThirds) {
  SGACoefficients co{Rational(1), Rational(2), Rational(3)};
  GeneralizedProblem gp = transform_problem(co, Rational(2, 3));
  EXPECT_EQ(gp.inv_square, Rational(5, 36) + Rational(4, 9) * co.a);
  EXPECT_EQ(gp.power_terms[0], (PowerTerm{Rational(4, 9) * co.b, Rational(2, 3)}));
  EXPECT_EQ(gp.power_terms[1], (PowerTerm{Rational(4, 9) * co.c, Rational(-2, 3)}));
  EXPECT_EQ(gp.wf_exponent, Rational(-1, 6));
  EXPECT_FALSE(family_notes(Rational(2, 3)).empty());
  EXPECT_TRUE(family_notes(3).empty());
}

TEST(Transform, RejectsNonPositiveP) {
  EXPECT_THROW(transform_problem({0, 0, 0}, 0), std::domain_error);
  EXPECT_THROW(transform_problem({0, 0, 0}, -1), std::domain_error);
}

TEST(Transform, FirstDerivativeEliminationIsExact) {
  for (const SGACoefficients& co : {SGACoefficients{Rational(-3, 4), -1, 4}, SGACoefficients{Rational(5, 2), Rational(-1, 3), 7}}) {
    for (const Rational& p : kPs) {
      DiffOp op = substituted_operator(co, p);
      EXPECT_TRUE(op.coefficient(1).is_zero()) << "p=" << p;
      EXPECT_EQ(op, DiffOp::derivative(2) + DiffOp::multiply(transform_problem(co, p).bracket_expoly())) << "p=" << p;
    }
  }
}

TEST(Transform, TransformedGroundStateSolvesMember) {
  // u(x) = x^{-(p-1)/2} R(x^p) must solve u'' + V u = 0; checked by finite differences.
  SGACoefficients co = to_abc({0, 1, Rational(-1, 4)});
  for (const Rational& p : kPs) {
    GeneralizedProblem gp = transform_problem(co, p);
    double pd = p.to_double();
    auto u = [pd](double x) { return std::pow(x, -(pd - 1) / 2) * ground_R(std::pow(x, pd)); };
    for (double s : {0.6, 1.0, 1.7}) {
      double x = std::pow(s, 1 / pd);
      double h = 1e-3 * x;
      double upp = (-u(x + 2 * h) + 16 * u(x + h) - 30 * u(x) + 16 * u(x - h) - u(x - 2 * h)) / (12 * h * h);
      double scale = std::abs(upp) + std::abs(gp.bracket(x) * u(x)) + 1e-12;
      EXPECT_LT(std::abs(upp + gp.bracket(x) * u(x)) / scale, 1e-6) << "p=" << p << " x=" << x;
    }
  }
}

TEST(Transform, GroupLaw) {
  SGACoefficients co{Rational(-7, 3), Rational(2, 5), Rational(-9)};
  for (auto [p, q] : {std::pair{Rational(2), Rational(1, 2)}, std::pair{Rational(3), Rational(1, 3)},
                      std::pair{Rational(2, 3), Rational(3, 5)}}) {
    EXPECT_EQ(retransform(transform_problem(co, p), q), transform_problem(co, p * q));
  }
}

TEST(InvertToRadial, Examples) {
  RadialProblem r = invert_to_radial(transform_problem({Rational(-3, 4), -1, 4}, Rational(1, 2)));
  EXPECT_EQ(r.C, Rational(0));
  EXPECT_EQ(r.D, Rational(1));
  EXPECT_EQ(*r.E_hat, Rational(-1, 4));
  r = invert_to_radial(transform_problem({0, 0, 0}, Rational(1, 2)));
  EXPECT_EQ(r.C, Rational(3, 16));
  EXPECT_EQ(r.D, Rational(0));
  EXPECT_EQ(*r.E_hat, Rational(0));
  r = invert_to_radial(transform_problem({Rational(-15, 4), -1, 2}, Rational(1, 2)));
  EXPECT_EQ(r.C, Rational(-3, 4));
  EXPECT_EQ(r.D, Rational(1, 2));
  EXPECT_EQ(*r.E_hat, Rational(-1, 4));
  EXPECT_THROW(invert_to_radial(transform_problem({0, 0, 0}, 3)), std::invalid_argument);
}

TEST(FamilyMembers, Examples) {
  auto m = family_members(0, 1, 0, Branch::plus, {3});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].problem.inv_square, Rational(-35, 4));
  EXPECT_EQ(m[0].problem.power_terms[0], (PowerTerm{-9, 10}));
  EXPECT_EQ(m[0].problem.power_terms[1], (PowerTerm{36, 4}));
  EXPECT_EQ(m[0].n, 0);

  m = family_members(0, 1, 0, Branch::plus, {1});
  EXPECT_EQ(m[0].problem.inv_square, m[0].source.a);

  m = family_members(Rational(-3, 4), 1, 0, Branch::plus, {Rational(1, 2)});
  RadialProblem r = invert_to_radial(m[0].problem);
  EXPECT_EQ(r.C, Rational(-3, 4));
  EXPECT_EQ(r.D, Rational(1));
  EXPECT_EQ(*r.E_hat, Rational(-1, 9));
}

TEST(FamilyMembers, QuantizationCarriesOver) {
  for (const Rational& p : kPs) {
    for (auto& mem : family_members(Rational(-3, 4), Rational(1, 2), 2, Branch::plus, {p})) {
      EXPECT_TRUE(quantization_residual(mem.source, mem.n, mem.branch).is_zero());
    }
  }
}

TEST(FamilyMembers, Errors) {
  EXPECT_THROW(family_members(1, 1, 0, Branch::plus, {3}), std::domain_error);
  EXPECT_THROW(family_members(Rational(1, 8), 1, 0, Branch::plus, {3}), std::domain_error);  // irrational level
}
