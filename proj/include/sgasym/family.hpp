// Isospectral family of R'' + (a/s^2 + b s^2 + c) R = 0 under s = x^p.
//
// With R = x^{(p-1)/2} u the first-derivative term cancels and
//
//   u'' + [ -(p^2 - 1)/(4x^2) + p^2 (a/x^2 + b x^{4p-2} + c x^{2p-2}) ] u = 0.
//
// The same rule maps any u'' + sum_e k_e x^e u = 0 under x = t^q to
//   v'' + [ -(q^2 - 1)/(4t^2) + q^2 sum_e k_e t^{q(e+2)-2} ] v = 0,
// which makes the family closed under composition (p, q) -> p q.

#pragma once

#include "sgasym/diffop.hpp"
#include "sgasym/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgasym {

struct PowerTerm {
  Rational coeff;
  Rational exponent;
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

struct GeneralizedProblem {
  Rational p;                          // s = x^p
  Rational inv_square;                 // net coefficient of 1/x^2
  std::vector<PowerTerm> power_terms;  // remaining k x^e terms
  Rational wf_exponent;                // R = x^{wf_exponent} u

  friend bool operator==(const GeneralizedProblem&, const GeneralizedProblem&) = default;

  /// The bracket V(x) of u'' + V(x) u = 0.
  double bracket(double x) const {
    double v = inv_square.to_double() / (x * x);
    for (const auto& t : power_terms) v += t.coeff.to_double() * std::pow(x, t.exponent.to_double());
    return v;
  }

  ExpPoly bracket_expoly() const {
    ExpPoly v = ExpPoly::term(inv_square, -2);
    for (const auto& t : power_terms) v += ExpPoly::term(t.coeff, t.exponent);
    return v;
  }
};

inline GeneralizedProblem transform_problem(const SGACoefficients& co, const Rational& p) {
  if (p.sign() <= 0) throw std::domain_error("transform_problem: p must be positive, got " + p.to_string());
  Rational p2 = p * p;
  GeneralizedProblem gp;
  gp.p = p;
  gp.inv_square = -(p2 - 1) / 4 + p2 * co.a;
  gp.power_terms = {{p2 * co.b, 4 * p - 2}, {p2 * co.c, 2 * p - 2}};
  gp.wf_exponent = (p - 1) / 2;
  return gp;
}

/// Applies a further substitution x = t^q to an already transformed problem.
inline GeneralizedProblem retransform(const GeneralizedProblem& gp, const Rational& q) {
  if (q.sign() <= 0) throw std::domain_error("retransform: q must be positive, got " + q.to_string());
  Rational q2 = q * q;
  GeneralizedProblem out;
  out.p = gp.p * q;
  out.inv_square = -(q2 - 1) / 4 + q2 * gp.inv_square;
  for (const auto& t : gp.power_terms) out.power_terms.push_back({q2 * t.coeff, q * (t.exponent + 2) - 2});
  out.wf_exponent = q * gp.wf_exponent + (q - 1) / 2;
  return out;
}

/// The p = 1/2 member undoes x = s^2 and is again of the form C/x^2 + D/x + E.
inline RadialProblem invert_to_radial(const GeneralizedProblem& gp) {
  if (gp.p != Rational(1, 2)) throw std::invalid_argument("invert_to_radial: requires p = 1/2, got " + gp.p.to_string());
  std::optional<Rational> d, e;
  for (const auto& t : gp.power_terms) {
    if (t.exponent == Rational(-1) && !d) {
      d = t.coeff;
    } else if (t.exponent == Rational(0) && !e) {
      e = t.coeff;
    } else {
      throw std::invalid_argument("invert_to_radial: unexpected exponent " + t.exponent.to_string());
    }
  }
  if (!d || !e) throw std::invalid_argument("invert_to_radial: power terms must have exponents {0, -1}");
  return {gp.inv_square, *d, *e};
}

/// d^2/ds^2 + f(s) rewritten in x (s = x^p) and conjugated by R = x^{(p-1)/2} u,
/// normalized to leading coefficient 1. Built purely in the operator algebra,
/// independently of the closed-form coefficients in transform_problem.
inline DiffOp substituted_operator(const SGACoefficients& co, const Rational& p) {
  if (p.sign() <= 0) throw std::domain_error("substituted_operator: p must be positive");
  DiffOp d_ds = DiffOp::term(1, ExpPoly::term(p.inverse(), 1 - p));
  ExpPoly f = ExpPoly::term(co.a, -2 * p) + ExpPoly::term(co.b, 2 * p) + ExpPoly(co.c);
  DiffOp in_s = d_ds * d_ds + DiffOp::multiply(f);
  Rational k = (p - 1) / 2;
  return DiffOp::multiply(ExpPoly::term(p * p, 2 * p - 2 - k)) * in_s * DiffOp::multiply(ExpPoly::monomial(k));
}

struct FamilyMember {
  GeneralizedProblem problem;
  SGACoefficients source;
  int n = 0;
  Branch branch = Branch::plus;
};

/// Transformed problems sharing the quantization condition of level n.
/// The level must be rational so that (a, b, c) stay rational.
inline std::vector<FamilyMember> family_members(const Rational& C, const Rational& D, int n, Branch branch,
                                                const std::vector<Rational>& ps) {
  EnergyLevel level = discrete_energy(C, D, n, branch);
  if (!level.E_hat.is_rational()) {
    throw std::domain_error("family_members: level " + level.E_hat.to_string() + " is irrational");
  }
  SGACoefficients co = to_abc({C, D, level.E_hat.rational_value()});
  std::vector<FamilyMember> out;
  for (const Rational& p : ps) out.push_back({transform_problem(co, p), co, n, branch});
  return out;
}

/// Known differences between the general rule and individually printed members.
inline std::vector<std::string> family_notes(const Rational& p) {
  if (p == Rational(2, 3)) {
    return {"p=2/3: derived bracket is a/y^2 scaled by 4/9 plus +5/(36y^2), with 4/9 also on the c term; "
            "a printed form with -5/(36y^2), unscaled a and unscaled c does not satisfy the substitution"};
  }
  return {};
}

}  // namespace sgasym
