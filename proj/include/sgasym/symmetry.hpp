// Lie point symmetries of u'' = omega(x, u, u').
//
// For X = xi d/dx + eta d/du the second prolongation gives the determining
// expression (p = u')
//
//   eta_xx + (2 eta_xu - xi_xx) p + (eta_uu - 2 xi_xu) p^2 - xi_uu p^3
//     + (eta_u - 2 xi_x - 3 p xi_u) omega - xi omega_x - eta omega_u
//     - (eta_x + (eta_u - xi_x) p - xi_u p^2) omega_p,
//
// which vanishes identically iff X is a symmetry. For omega = -Q(x) u the
// p^3, p^2 and p^1 parts force xi = u alpha + beta, eta = u^2 alpha' + u gamma + delta
// with alpha'' + Q alpha = 0, delta'' + Q delta = 0, gamma = beta'/2 + kappa and
//
//   beta''' + 4 Q beta' + 2 Q' beta = 0.

#pragma once

#include "sgasym/linalg.hpp"
#include "sgasym/spectrum.hpp"
#include "sgasym/vector_field.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgasym {

inline UPPoly determining_residual_general(const UPPoly& omega, const VectorField& field) {
  const UPPoly& xi = field.xi;
  const UPPoly& eta = field.eta;
  if (xi.degree_u() > 2 || eta.degree_u() > 2) {
    throw std::invalid_argument("determining_residual: field components must have degree <= 2 in u");
  }
  if (xi.degree_p() > 0 || eta.degree_p() > 0) {
    throw std::invalid_argument("determining_residual: point fields cannot depend on u'");
  }
  const UPPoly p = UPPoly::p();
  const UPPoly xi_x = xi.dx(), xi_u = xi.du();
  const UPPoly eta_x = eta.dx(), eta_u = eta.du();
  auto times = [](UPPoly f, int k) { return f.scale(GaussRational(k)); };

  UPPoly r = eta_x.dx();
  r += p * (times(eta_x.du(), 2) - xi_x.dx());
  r += p * p * (eta_u.du() - times(xi_x.du(), 2));
  r -= p * p * p * xi_u.du();
  r += omega * (eta_u - times(xi_x, 2) - times(p * xi_u, 3));
  r -= xi * omega.dx();
  r -= eta * omega.du();
  r -= omega.dp() * (eta_x + p * (eta_u - xi_x) - p * p * xi_u);
  return r;
}

/// Residual for omega = -Q(x) u.
inline UPPoly determining_residual(const ExpPoly& Q, const VectorField& field) {
  return determining_residual_general(UPPoly::monomial(1, 0, -Q), field);
}

/// C/x^2 + D/x + E.
inline ExpPoly kratzer_q(const Rational& C, const Rational& D, const Rational& E_hat) {
  return ExpPoly::term(C, -2) + ExpPoly::term(D, -1) + ExpPoly(E_hat);
}

/// -(x^2 + E), i.e. u'' = (x^2 + E) u.
inline ExpPoly oscillator_q(const Rational& E_hat) { return -(ExpPoly::monomial(2) + ExpPoly(E_hat)); }

inline ExpPoly beta_residual(const ExpPoly& Q, const ExpPoly& beta) {
  ExpPoly b1 = beta.derive();
  return b1.derive(2) + ExpPoly(4) * Q * b1 + ExpPoly(2) * Q.derive() * beta;
}

/// beta''' + 4(C/x^2 + D/x + E) beta' - (4C/x^3 + 2D/x^2) beta.
inline ExpPoly beta_ode_residual(const Rational& C, const Rational& D, const Rational& E_hat, const ExpPoly& beta) {
  return beta_residual(kratzer_q(C, D, E_hat), beta);
}

/// f'' + Q f.
inline ExpPoly solution_residual(const ExpPoly& Q, const ExpPoly& f) { return f.derive(2) + Q * f; }

struct GCoefficient {
  int l = 0;          // power x^{-l}
  Rational coeff;     // g_l = coeff * D^{d_power} with g_N = 1
  int d_power = 0;    // N - l
};

struct SymmetrySolution {
  int N = 0;
  Rational C;
  Rational E_over_D2;
  std::vector<GCoefficient> g;  // l = N down to 0
  Rational kappa;
  std::size_t nullity = 1;
  std::vector<std::string> notes;

  /// beta(x) = sum_l g_l x^{-l} at the given D.
  ExpPoly beta(const Rational& D) const {
    ExpPoly out;
    for (const auto& gc : g) out += ExpPoly::term(gc.coeff * D.pow(gc.d_power), -gc.l);
    return out;
  }
  Rational E_hat(const Rational& D) const { return E_over_D2 * D * D; }
  ExpPoly Q(const Rational& D) const { return kratzer_q(C, D, E_hat(D)); }
  Rational g_coeff(int l) const {
    for (const auto& gc : g) {
      if (gc.l == l) return gc.coeff;
    }
    return {};
  }
};

namespace detail {

/// Rows of M(t) v = 0 where the residual of basis function j is r0[j] + t r1[j];
/// one row per ExpKey that occurs anywhere.
inline Matrix<UPoly> affine_system(const std::vector<ExpPoly>& r0, const std::vector<ExpPoly>& r1) {
  std::set<ExpKey> keys;
  for (const auto* rs : {&r0, &r1}) {
    for (const auto& r : *rs) {
      for (const auto& [k, c] : r.terms()) {
        if (!c.is_real()) throw std::logic_error("affine_system: complex coefficient");
        keys.insert(k);
      }
    }
  }
  Matrix<UPoly> m;
  for (const auto& k : keys) {
    std::vector<UPoly> row;
    for (std::size_t j = 0; j < r0.size(); ++j) {
      row.push_back(UPoly(std::vector<Rational>{r0[j].coefficient(k).re(), r1[j].coefficient(k).re()}));
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

/// All rational solutions of the Laurent ansatz beta = sum_{l=0..N} g_l x^{-l}
/// with g_N != 0, ascending in E/D^2.
///
/// The x^{-N-3} coefficient is -(N+1)(N(N+2) + 4C) g_N, which fixes C. With D = 1
/// the remaining system is affine in E; its special values are the rational
/// roots of a maximal minor, each confirmed by an exact kernel. D is restored by
/// g_l ~ D^{N-l}, E ~ D^2.
inline std::vector<SymmetrySolution> ansatz_solve_all(int N) {
  if (N < 1) throw std::invalid_argument("ansatz_solve: N must be >= 1");
  const Rational C = Rational(-N * (N + 2), 4);
  std::vector<ExpPoly> r0, r1;
  for (int l = 0; l <= N; ++l) {
    ExpPoly basis = ExpPoly::monomial(-l);
    ExpPoly at0 = beta_ode_residual(C, 1, 0, basis);
    r0.push_back(at0);
    r1.push_back(beta_ode_residual(C, 1, 1, basis) - at0);
  }
  ParametricNullspace pn = parametric_nullspace_with_roots(detail::affine_system(r0, r1), N + 1);
  if (pn.generic) throw std::logic_error("ansatz_solve: kernel is nontrivial for every E");

  std::vector<SymmetrySolution> out;
  for (const auto& sp : pn.special) {
    // Reduce the kernel to vectors with g_N = 1 where possible.
    auto it = std::find_if(sp.basis.begin(), sp.basis.end(), [N](const auto& v) { return !v[N].is_zero(); });
    if (it == sp.basis.end()) continue;
    std::vector<Rational> v = *it;
    Rational lead = v[N];
    for (auto& q : v) q /= lead;
    SymmetrySolution s;
    s.N = N;
    s.C = C;
    s.E_over_D2 = sp.t;
    s.nullity = sp.basis.size();
    for (int l = N; l >= 0; --l) s.g.push_back({l, v[l], N - l});
    if (s.nullity > 1) s.notes.push_back("kernel dimension " + std::to_string(s.nullity) + "; one representative kept");
    if (N == 2) {
      s.notes.push_back("N=2: the exact system gives g1 = D g2; the relation g1 = 2D g2 leaves a nonzero residual");
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.E_over_D2 < b.E_over_D2; });
  return out;
}

/// The principal solution: the largest E/D^2 (closest to threshold).
inline std::optional<SymmetrySolution> ansatz_solve(int N) {
  auto all = ansatz_solve_all(N);
  if (all.empty()) return std::nullopt;
  SymmetrySolution s = all.back();
  if (all.size() > 1) {
    std::string others;
    for (std::size_t k = 0; k + 1 < all.size(); ++k) others += (k ? ", " : "") + all[k].E_over_D2.to_string();
    s.notes.push_back("further roots E/D^2 = " + others);
  }
  return s;
}

/// xi = u alpha + beta, eta = u^2 alpha' + u (beta'/2 + kappa) + delta.
inline VectorField assemble_field(const ExpPoly& alpha, const ExpPoly& beta, const ExpPoly& delta, const Rational& kappa) {
  ExpPoly gamma = ExpPoly(beta.derive()).scale(Rational(1, 2)) + ExpPoly(kappa);
  return VectorField::from_u({beta, alpha}, {delta, gamma, alpha.derive()});
}

inline VectorField build_vector_field(const SymmetrySolution& sol, const ExpPoly& alpha, const ExpPoly& delta,
                                      const Rational& kappa, const Rational& D) {
  ExpPoly Q = sol.Q(D);
  if (!solution_residual(Q, alpha).is_zero()) throw std::invalid_argument("build_vector_field: alpha does not solve f'' + Q f = 0");
  if (!solution_residual(Q, delta).is_zero()) throw std::invalid_argument("build_vector_field: delta does not solve f'' + Q f = 0");
  return assemble_field(alpha, sol.beta(D), delta, kappa);
}

struct OscillatorBetaSolution {
  std::optional<Rational> E_hat;  // empty when the kernel exists for every E
  std::vector<std::pair<int, Rational>> g;  // (l, g_l) for beta = sum g_l x^{-l}
};

/// Laurent ansatz beta = sum_{l=-N_pos..N_neg} g_l x^{-l} against Q = -(x^2 + E).
inline std::optional<OscillatorBetaSolution> oscillator_beta_solve(int n_neg, int n_pos) {
  if (n_neg < 0 || n_pos < 0) throw std::invalid_argument("oscillator_beta_solve: negative bound");
  std::vector<ExpPoly> r0, r1;
  std::vector<int> ls;
  for (int l = -n_pos; l <= n_neg; ++l) {
    ExpPoly basis = ExpPoly::monomial(-l);
    ExpPoly at0 = beta_residual(oscillator_q(0), basis);
    r0.push_back(at0);
    r1.push_back(beta_residual(oscillator_q(1), basis) - at0);
    ls.push_back(l);
  }
  Matrix<UPoly> m = detail::affine_system(r0, r1);
  ParametricNullspace pn = parametric_nullspace_with_roots(m, ls.size());
  if (pn.generic) {
    // Kernel at an arbitrary E is the generic kernel; E = 0 serves as a witness.
    auto basis = nullspace(detail::evaluate_at(m, Rational(0)), ls.size());
    OscillatorBetaSolution s;
    for (std::size_t j = 0; j < ls.size(); ++j) s.g.emplace_back(ls[j], basis.front()[j]);
    return s;
  }
  if (pn.special.empty()) return std::nullopt;
  OscillatorBetaSolution s;
  s.E_hat = pn.special.front().t;
  for (std::size_t j = 0; j < ls.size(); ++j) s.g.emplace_back(ls[j], pn.special.front().basis.front()[j]);
  return s;
}

/// Physicists' Hermite polynomial.
inline ExpPoly hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  ExpPoly prev(1);
  if (n == 0) return prev;
  ExpPoly cur = ExpPoly::term(2, 1);
  for (int k = 1; k < n; ++k) {
    ExpPoly next = ExpPoly::term(2, 1) * cur - ExpPoly(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// e^{-x^2/2} H_n.
inline ExpPoly oscillator_state(int n) { return ExpPoly::exponential(0, Rational(-1, 2)) * hermite(n); }

/// Field xi = u alpha, eta = u^2 alpha' + delta with alpha = delta = e^{-x^2/2} H_n,
/// checked against u'' = (x^2 - (2 level + 1)) u; level defaults to n.
inline UPPoly oscillator_field_check(int n, std::optional<int> level = std::nullopt) {
  ExpPoly a = oscillator_state(n);
  VectorField f = VectorField::from_u({ExpPoly(), a}, {a, ExpPoly(), a.derive()});
  return determining_residual(oscillator_q(-(2 * level.value_or(n) + 1)), f);
}

struct NamedField {
  std::string label;
  VectorField field;
};

/// Basis of the eight-parameter symmetry algebra of u'' = -u, with sin/cos
/// written as complex exponentials.
inline std::vector<NamedField> free_particle_fields() {
  const ExpPoly s1 = ExpPoly::sin(1), c1 = ExpPoly::cos(1);
  const ExpPoly s2 = ExpPoly::sin(2), c2 = ExpPoly::cos(2);
  auto u_only = [](std::vector<ExpPoly> xi, std::vector<ExpPoly> eta) { return VectorField::from_u(xi, eta); };
  return {
      {"a1 sin: xi = u sin x, eta = u^2 cos x", u_only({0, s1}, {0, 0, c1})},
      {"a1 cos: xi = u cos x, eta = -u^2 sin x", u_only({0, c1}, {0, 0, -s1})},
      {"a3 sin: eta = sin x", u_only({}, {s1})},
      {"a3 cos: eta = cos x", u_only({}, {c1})},
      {"a5: eta = u", u_only({}, {0, 1})},
      {"a6: xi = 1", u_only({1}, {})},
      {"a7 sin: xi = sin 2x, eta = u cos 2x", u_only({s2}, {0, c2})},
      {"a7 cos: xi = cos 2x, eta = -u sin 2x", u_only({c2}, {0, -s2})},
  };
}

/// Closed-form instance at C = -3/4, D = 1/2, E = -1/4: f = x^{-1/2} e^{x/2}.
inline ExpPoly kratzer_half_state() { return ExpPoly::term(1, Rational(-1, 2), Rational(1, 2)); }

}  // namespace sgasym
