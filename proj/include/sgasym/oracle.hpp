// Finite-difference eigenvalue oracle for -u'' + V(x) u = lambda u on [x_min, x_max]
// with Dirichlet ends. Eigenvalues of the symmetric tridiagonal matrix are found
// by bisection on Sturm (inertia) counts, which is deterministic and needs no
// iteration-order-sensitive reductions.

#pragma once

#include "sgasym/family.hpp"
#include "sgasym/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgasym {

struct Grid {
  double x_min = 0;  // Dirichlet wall
  double x_max = 0;
  int m = 0;  // interior points
  double h = 0;

  static Grid make(double x_min, double x_max, int m) {
    // x_min = 0 is allowed: the wall sits at the boundary and V is only sampled inside.
    if (!(x_min >= 0) || !(x_max > x_min)) throw std::invalid_argument("Grid: need 0 <= x_min < x_max");
    if (m < 3) throw std::invalid_argument("Grid: need m >= 3");
    return {x_min, x_max, m, (x_max - x_min) / (m + 1)};
  }
  double point(int i) const { return x_min + (i + 1) * h; }
};

struct TriMatrix {
  std::vector<double> diag;
  std::vector<double> off;
  int size() const { return static_cast<int>(diag.size()); }
};

using Potential = std::function<double(double)>;

inline TriMatrix discretize(const Potential& v, const Grid& grid) {
  TriMatrix t;
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  t.diag.resize(grid.m);
  t.off.assign(grid.m - 1, -inv_h2);
  for (int i = 0; i < grid.m; ++i) {
    double x = grid.point(i);
    double vx = v(x);
    if (!std::isfinite(vx)) {
      throw std::domain_error("discretize: potential is not finite at x = " + std::to_string(x));
    }
    t.diag[i] = 2 * inv_h2 + vx;
  }
  return t;
}

/// Number of eigenvalues strictly below lambda.
inline int sturm_count(const TriMatrix& t, double lambda) {
  // Pivots of the LDL^T factorization of T - lambda I; a zero pivot is nudged
  // to a tiny negative value, as in LAPACK's dstebz.
  const double pivmin = std::numeric_limits<double>::min() * 16;
  int count = 0;
  double d = t.diag[0] - lambda;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0) ++count;
  for (int i = 1; i < t.size(); ++i) {
    d = t.diag[i] - lambda - t.off[i - 1] * t.off[i - 1] / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++count;
  }
  return count;
}

inline std::pair<double, double> gershgorin(const TriMatrix& t) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (int i = 0; i < t.size(); ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < t.size() ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

/// The j-th smallest eigenvalue (0-based) by bisection within [lo, hi].
inline double eigenvalue_by_index(const TriMatrix& t, int j, double tol, double lo, double hi) {
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // interval at machine resolution
    if (sturm_count(t, mid) > j) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

inline std::vector<double> lowest_eigenvalues(const TriMatrix& t, int k, double tol) {
  if (k < 1 || k > t.size()) throw std::invalid_argument("lowest_eigenvalues: k out of range");
  if (!(tol > 0)) throw std::invalid_argument("lowest_eigenvalues: tol must be positive");
  auto [lo, hi] = gershgorin(t);
  std::vector<double> out;
  for (int j = 0; j < k; ++j) {
    // Eigenvalues come out ascending, so the previous one is a valid lower bound.
    double start = out.empty() ? lo : out.back() - tol;
    out.push_back(eigenvalue_by_index(t, j, tol, start, hi));
  }
  return out;
}

/// Smallest |lambda| over the spectrum: the eigenvalues on either side of 0.
inline double smallest_abs_eigenvalue(const TriMatrix& t, double tol) {
  auto [lo, hi] = gershgorin(t);
  int below = sturm_count(t, 0.0);
  double best = INFINITY;
  if (below > 0) best = std::min(best, std::abs(eigenvalue_by_index(t, below - 1, tol, lo, 0.0)));
  if (below < t.size()) best = std::min(best, std::abs(eigenvalue_by_index(t, below, tol, 0.0, hi)));
  return best;
}

struct LevelRecord {
  int n = 0;
  Algebraic closed_form;
  double coarse = 0;
  double fine = 0;
  double numeric = 0;  // Richardson value
  double rel_error = 0;
};

struct SpectrumReport {
  Rational C;
  Rational D;
  Grid coarse;
  Grid fine;
  std::vector<LevelRecord> levels;
  bool converged = false;
  /// (E_coarse - exact) / (E_fine - exact) for n = 0; about 4 for a second-order stencil.
  double refinement_ratio = 0;
  std::string note = "plus branch only; minus-branch values are formal and not checked numerically";
};

struct OracleOptions {
  int m = 20000;
  double tol = 1e-12;
  double x_min_scale = 1e-9;  // x_min = x_min_scale / D
  double x_max_scale = 40;    // x_max = x_max_scale (n_max + 1)^2 / D
  double converged_rel = 1e-4;
};

/// Discretizes -u'' + (-C/x^2 - D/x) u = E u and compares with the plus-branch closed form.
inline SpectrumReport solve_radial(const Rational& C, const Rational& D, int k, const OracleOptions& opt = {}) {
  if (k < 1) throw std::invalid_argument("solve_radial: k must be >= 1");
  if (D.sign() <= 0) throw std::domain_error("solve_radial: D must be positive");
  if (C > Rational(1, 4)) throw std::domain_error("solve_radial: C must be <= 1/4");

  const double c = C.to_double();
  const double d = D.to_double();
  SpectrumReport rep;
  rep.C = C;
  rep.D = D;
  const double x_min = opt.x_min_scale / d;
  const double x_max = opt.x_max_scale * (k * k) / d;
  rep.coarse = Grid::make(x_min, x_max, opt.m);
  rep.fine = Grid::make(x_min, x_max, 2 * opt.m);

  Potential v = [c, d](double x) { return -c / (x * x) - d / x; };
  auto run = [&](const Grid& g) { return lowest_eigenvalues(discretize(v, g), k, opt.tol); };
  auto fine_future = std::async(std::launch::async, run, rep.fine);
  std::vector<double> coarse = run(rep.coarse);
  std::vector<double> fine = fine_future.get();

  const double r = rep.coarse.h / rep.fine.h;
  rep.converged = true;
  for (int n = 0; n < k; ++n) {
    LevelRecord lv;
    lv.n = n;
    lv.closed_form = discrete_energy(C, D, n, Branch::plus).E_hat;
    lv.coarse = coarse[n];
    lv.fine = fine[n];
    lv.numeric = (r * r * fine[n] - coarse[n]) / (r * r - 1);
    double exact = lv.closed_form.to_double();
    lv.rel_error = std::abs(lv.numeric - exact) / std::abs(exact);
    if (std::abs(coarse[n] - fine[n]) / std::abs(fine[n]) > opt.converged_rel) rep.converged = false;
    if (n == 0) rep.refinement_ratio = (coarse[0] - exact) / (fine[0] - exact);
    rep.levels.push_back(std::move(lv));
  }
  return rep;
}

/// Smallest |eigenvalue| of -u'' - V(x) u, where u'' + V(x) u = 0 is the family member.
inline double zero_mode_residual(const GeneralizedProblem& gp, const Grid& grid, double tol = 1e-10) {
  for (double x : {grid.point(0), grid.point(grid.m - 1)}) {
    if (!std::isfinite(gp.bracket(x))) {
      throw std::domain_error("zero_mode_residual: potential overflows at x = " + std::to_string(x) +
                              "; try x_max below " + std::to_string(grid.x_max / 2));
    }
  }
  TriMatrix t = discretize([&gp](double x) { return -gp.bracket(x); }, grid);
  return smallest_abs_eigenvalue(t, tol);
}

/// Maps the radial domain [1e-8/D, 60 (n+1)^2 / D] through s = sqrt(x), y = s^{1/p}.
inline Grid suggest_zero_mode_grid(const Rational& p, const Rational& D, int n, int m = 40000) {
  const double d = D.to_double();
  const double inv_p = 1.0 / p.to_double();
  auto map = [inv_p](double x) { return std::pow(std::sqrt(x), inv_p); };
  return Grid::make(map(1e-8 / d), map(60.0 * (n + 1) * (n + 1) / d), m);
}

}  // namespace sgasym
