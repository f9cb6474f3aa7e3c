#include "sgasym/oracle.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <future>
#include <random>

using namespace sgasym;

namespace {

std::vector<double> dense_eigenvalues(const TriMatrix& t) {
  const int m = t.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) a(i, i) = t.diag[i];
  for (int i = 0; i + 1 < m; ++i) a(i, i + 1) = a(i + 1, i) = t.off[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m);
  return out;
}

}  // namespace

TEST(Discretize, Examples) {
  Grid g = Grid::make(0, 4, 3);
  ASSERT_EQ(g.h, 1.0);
  TriMatrix t = discretize([](double) { return 0.0; }, g);
  EXPECT_EQ(t.diag, (std::vector<double>{2, 2, 2}));
  EXPECT_EQ(t.off, (std::vector<double>{-1, -1}));
  t = discretize([](double x) { return -1 / x; }, g);
  EXPECT_DOUBLE_EQ(t.diag[0], 1);
  EXPECT_DOUBLE_EQ(t.diag[1], 1.5);
  EXPECT_DOUBLE_EQ(t.diag[2], 5.0 / 3);
  EXPECT_THROW(discretize([](double x) { return 1 / (x - 2); }, g), std::domain_error);
}

TEST(Grid, Invariants) {
  EXPECT_THROW(Grid::make(-0.1, 1, 10), std::invalid_argument);
  EXPECT_THROW(Grid::make(1, 1, 10), std::invalid_argument);
  EXPECT_THROW(Grid::make(0.1, 1, 2), std::invalid_argument);
  Grid g = Grid::make(0.5, 2.5, 9);
  EXPECT_DOUBLE_EQ(g.h, 0.2);
}

TEST(Bisection, SmallExamples) {
  TriMatrix t{{2, 2, 2}, {-1, -1}};
  auto ev = lowest_eigenvalues(t, 3, 1e-13);
  EXPECT_NEAR(ev[0], 2 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(ev[1], 2, 1e-12);
  EXPECT_NEAR(ev[2], 2 + std::sqrt(2.0), 1e-12);
  TriMatrix one{{5}, {}};
  EXPECT_NEAR(lowest_eigenvalues(one, 1, 1e-13)[0], 5, 1e-12);
  EXPECT_THROW(lowest_eigenvalues(t, 0, 1e-6), std::invalid_argument);
  EXPECT_THROW(lowest_eigenvalues(t, 4, 1e-6), std::invalid_argument);
  EXPECT_THROW(lowest_eigenvalues(t, 1, 0), std::invalid_argument);
}

TEST(Bisection, MatchesDenseSolverOnRandomMatrices) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> val(-10, 10);
  std::uniform_int_distribution<int> size(1, 50);
  for (int trial = 0; trial < 60; ++trial) {
    int m = size(rng);
    TriMatrix t;
    for (int i = 0; i < m; ++i) t.diag.push_back(val(rng));
    for (int i = 0; i + 1 < m; ++i) t.off.push_back(trial % 5 == 0 ? 0.0 : val(rng));  // some decoupled blocks
    auto ref = dense_eigenvalues(t);
    auto ev = lowest_eigenvalues(t, m, 1e-13);
    for (int i = 0; i < m; ++i) EXPECT_NEAR(ev[i], ref[i], 1e-10) << "trial " << trial << " i " << i;
  }
}

TEST(Bisection, SturmCountIsInertia) {
  TriMatrix t{{2, 2, 2}, {-1, -1}};
  EXPECT_EQ(sturm_count(t, 0), 0);
  EXPECT_EQ(sturm_count(t, 1), 1);
  EXPECT_EQ(sturm_count(t, 3), 2);
  EXPECT_EQ(sturm_count(t, 4), 3);
}

TEST(Bisection, HydrogenGroundStateOnModestGrid) {
  TriMatrix t = discretize([](double x) { return -1 / x; }, Grid::make(1e-9, 40, 4000));
  EXPECT_NEAR(lowest_eigenvalues(t, 1, 1e-12)[0], -0.25, 1e-3);
}

TEST(SolveRadial, CoulombLevels) {
  SpectrumReport r = solve_radial(0, 1, 2);
  ASSERT_EQ(r.levels.size(), 2u);
  EXPECT_NEAR(r.levels[0].numeric, -0.25, 0.25e-3);
  EXPECT_NEAR(r.levels[1].numeric, -0.0625, 0.0625e-3);
  EXPECT_TRUE(r.converged);
}

TEST(SolveRadial, KratzerAndScaling) {
  SpectrumReport r1 = solve_radial(Rational(-3, 4), 1, 1);
  EXPECT_NEAR(r1.levels[0].numeric, -1.0 / 9, 1e-3 / 9);
  SpectrumReport r2 = solve_radial(Rational(-3, 4), 2, 1);
  EXPECT_NEAR(r2.levels[0].numeric, -4.0 / 9, 4e-3 / 9);
}

TEST(SolveRadial, SecondOrderRefinement) {
  SpectrumReport r = solve_radial(0, 1, 1);
  EXPECT_GE(r.refinement_ratio, 3);
  EXPECT_LE(r.refinement_ratio, 5);
}

TEST(SolveRadial, Preconditions) {
  EXPECT_THROW(solve_radial(0, 0, 1), std::domain_error);
  EXPECT_THROW(solve_radial(Rational(1, 2), 1, 1), std::domain_error);
  EXPECT_THROW(solve_radial(0, 1, 0), std::invalid_argument);
}

TEST(SolveRadial, DeterministicAcrossRunsAndThreads) {
  OracleOptions opt;
  opt.m = 3000;
  SpectrumReport a = solve_radial(0, 1, 2, opt);
  auto fut = std::async(std::launch::async, [&] { return solve_radial(0, 1, 2, opt); });
  SpectrumReport b = fut.get();
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    EXPECT_EQ(a.levels[i].numeric, b.levels[i].numeric);
    EXPECT_EQ(a.levels[i].coarse, b.levels[i].coarse);
  }
}

TEST(ZeroMode, FamilyMembers) {
  auto members = family_members(0, 1, 0, Branch::plus, {3, 1, Rational(1, 2)});
  EXPECT_LT(zero_mode_residual(members[0].problem, Grid::make(0.05, 2.2, 40000)), 1e-2);
  EXPECT_LT(zero_mode_residual(members[1].problem, suggest_zero_mode_grid(1, 1, 0)), 1e-4);
  EXPECT_LT(zero_mode_residual(members[2].problem, suggest_zero_mode_grid(Rational(1, 2), 1, 0)), 1e-4);
  // The p = 1/2 member is the original problem shifted by E.
  RadialProblem back = invert_to_radial(members[2].problem);
  EXPECT_EQ(*back.E_hat, Rational(-1, 4));
}

TEST(ZeroMode, WrongLevelHasNoZeroMode) {
  SGACoefficients wrong = to_abc({0, 1, Rational(-1, 5)});
  EXPECT_GT(zero_mode_residual(transform_problem(wrong, 1), suggest_zero_mode_grid(1, 1, 0)), 1e-2);
}

TEST(ZeroMode, OverflowIsReported) {
  GeneralizedProblem gp = transform_problem({0, -1, 0}, 30);  // x^118
  EXPECT_THROW(zero_mode_residual(gp, Grid::make(0.5, 1e4, 100)), std::domain_error);
}
