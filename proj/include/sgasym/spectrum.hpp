// Spectrum-generating-algebra pipeline for u'' + (C/x^2 + D/x + E)u = 0.
//
// x = s^2, u = s^{1/2} R maps the problem to R'' + (a/s^2 + b s^2 + c)R = 0
// with a = (16C - 3)/4, b = 4E, c = 4D. Discrete levels satisfy
//
//   4n + 2 +/- sqrt(1 - 4a) = c / sqrt(-b),
//
// and because 1 - 4a = 4(1 - 4C) and c/sqrt(-b) = 2D/sqrt(-E) this solves to
//
//   E = -D^2 / [(2n + 1) +/- sqrt(1 - 4C)]^2.

#pragma once

#include "sgasym/algebraic.hpp"
#include "sgasym/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace sgasym {

struct RadialProblem {
  Rational C;
  Rational D;
  std::optional<Rational> E_hat;
};

struct SGACoefficients {
  Rational a;
  Rational b;
  Rational c;
  friend bool operator==(const SGACoefficients&, const SGACoefficients&) = default;
};

enum class Branch { plus, minus };

inline std::string to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

inline Branch parse_branch(std::string_view text) {
  if (text == "plus" || text == "+") return Branch::plus;
  if (text == "minus" || text == "-") return Branch::minus;
  throw std::invalid_argument("branch must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

struct EnergyLevel {
  int n = 0;
  Algebraic E_hat;
  Branch branch = Branch::plus;
};

inline SGACoefficients to_abc(const RadialProblem& problem) {
  if (!problem.E_hat) throw std::invalid_argument("to_abc: E_hat is required");
  return {(16 * problem.C - 3) / 4, 4 * *problem.E_hat, 4 * problem.D};
}

/// E = -D^2 / [(2n+1) +/- sqrt(1-4C)]^2 on the requested branch.
///
/// Throws std::domain_error when 1 - 4C < 0, when D <= 0 (c/sqrt(-b) must be
/// positive), or when the branch denominator (2n+1) +/- sqrt(1-4C) is not
/// positive; throws std::invalid_argument for n < 0.
inline EnergyLevel discrete_energy(const Rational& C, const Rational& D, int n, Branch branch) {
  if (n < 0) throw std::invalid_argument("discrete_energy: n must be non-negative");
  Rational disc = 1 - 4 * C;
  if (disc.sign() < 0) throw std::domain_error("discrete_energy: 1 - 4C = " + disc.to_string() + " < 0");
  if (D.sign() <= 0) throw std::domain_error("discrete_energy: D must be positive for bound states");
  Algebraic root = Algebraic::sqrt(disc);
  Algebraic denom = Algebraic(2 * n + 1) + (branch == Branch::plus ? root : -root);
  if (denom.sign() <= 0) {
    throw std::domain_error("discrete_energy: branch denominator (2n+1) " + std::string(branch == Branch::plus ? "+" : "-") +
                            " sqrt(1-4C) = " + denom.to_string() + " is not positive");
  }
  Algebraic e = -Algebraic(D * D) / (denom * denom);
  return {n, e, branch};
}

/// (4n + 2 +/- sqrt(1 - 4a)) - c / sqrt(-b).
inline Algebraic quantization_residual(const SGACoefficients& co, int n, Branch branch) {
  if (co.b.sign() >= 0) throw std::domain_error("quantization_residual: b must be negative");
  Rational disc = 1 - 4 * co.a;
  if (disc.sign() < 0) throw std::domain_error("quantization_residual: 1 - 4a < 0");
  Algebraic root = Algebraic::sqrt(disc);
  Algebraic lhs = Algebraic(4 * n + 2) + (branch == Branch::plus ? root : -root);
  return lhs - Algebraic(co.c) / Algebraic::sqrt(-co.b);
}

enum class TiltMode { discrete, continuous };

struct Tilt {
  Rational tanh_theta;
  bool admissible = false;  // |tanh theta| < 1, i.e. a real tilt angle exists
};

/// tanh(theta) = -(1/2 + 8b)/(1/2 - 8b) (discrete) or its reciprocal form (continuous).
inline Tilt tilt_theta(const Rational& b, TiltMode mode) {
  Rational plus = Rational(1, 2) + 8 * b;
  Rational minus = Rational(1, 2) - 8 * b;
  const Rational& num = mode == TiltMode::discrete ? plus : minus;
  const Rational& den = mode == TiltMode::discrete ? minus : plus;
  if (den.is_zero()) throw std::domain_error("tilt_theta: b = " + b.to_string() + " makes the tilt singular");
  Rational t = -num / den;
  return {t, t.abs() < Rational(1)};
}

/// lambda = -c / (4 sqrt(-b)).
inline Algebraic continuous_lambda(const Rational& b, const Rational& c) {
  if (b.sign() >= 0) throw std::domain_error("continuous_lambda: b must be negative");
  return Algebraic(-c / 4) / Algebraic::sqrt(-b);
}

}  // namespace sgasym
