// Linear differential operators sum_k c_k(x) d^k/dx^k with ExpPoly
// coefficients, and the single-variable su(1,1) realizations built on them.
//
// Text form: "[f0]·d^0 + [f1]·d^1 + ..." with each f in ExpPoly text form,
// ascending order; the zero operator is "0".

#pragma once

#include "sgasym/expoly.hpp"
#include "sgasym/report.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace sgasym {

class DiffOp {
 public:
  DiffOp() = default;

  /// Multiplication by f.
  static DiffOp multiply(const ExpPoly& f) { return term(0, f); }
  /// d^k/dx^k
  static DiffOp derivative(int order = 1) { return term(order, ExpPoly(1)); }
  static DiffOp term(int order, const ExpPoly& coeff) {
    if (order < 0) throw std::invalid_argument("DiffOp: negative derivative order");
    DiffOp op;
    op.add(order, coeff);
    return op;
  }

  const std::map<int, ExpPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int order() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  ExpPoly coefficient(int order) const {
    auto it = coeffs_.find(order);
    return it == coeffs_.end() ? ExpPoly{} : it->second;
  }

  ExpPoly apply(const ExpPoly& f) const {
    ExpPoly out;
    ExpPoly df = f;
    int k = 0;
    for (const auto& [order, c] : coeffs_) {
      for (; k < order; ++k) df = df.derive();
      out += c * df;
    }
    return out;
  }

  DiffOp& operator+=(const DiffOp& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
  }
  DiffOp& scale(const GaussRational& s) {
    if (s.is_zero()) coeffs_.clear();
    for (auto& [k, c] : coeffs_) c.scale(s);
    return *this;
  }

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) { return a.scale(GaussRational(-1)); }
  friend DiffOp operator*(const GaussRational& s, DiffOp a) { return a.scale(s); }

  /// Composition: (a d^k) o (b d^j) = a sum_i C(k,i) b^{(i)} d^{k-i+j}.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [k, ak] : a.coeffs_) {
      for (const auto& [j, bj] : b.coeffs_) {
        ExpPoly deriv = bj;
        Rational binom = 1;
        for (int i = 0; i <= k; ++i) {
          out.add(k - i + j, ExpPoly(GaussRational(binom)) * ak * deriv);
          binom = binom * Rational(k - i) / Rational(i + 1);
          deriv = deriv.derive();
        }
      }
    }
    return out;
  }

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string render() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.render() + "]";
      out += kMiddleDot;
      out += "d^" + std::to_string(k);
    }
    return out;
  }

  static DiffOp parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "0") return {};
    DiffOp op;
    for (std::string_view piece : detail::split_top_level(text, " + ")) {
      auto close = piece.rfind(']');
      if (piece.empty() || piece.front() != '[' || close == std::string_view::npos) {
        throw std::invalid_argument("DiffOp: malformed term '" + std::string(piece) + "'");
      }
      std::string_view rest = piece.substr(close + 1);
      std::string prefix = std::string(kMiddleDot) + "d^";
      if (!rest.starts_with(prefix)) throw std::invalid_argument("DiffOp: missing order in '" + std::string(piece) + "'");
      int order = std::stoi(std::string(rest.substr(prefix.size())));
      op.add(order, ExpPoly::parse(piece.substr(1, close - 1)));
    }
    return op;
  }

 private:
  void add(int order, const ExpPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(order, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  std::map<int, ExpPoly> coeffs_;
};

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

// --- su(1,1) single-variable realizations ---------------------------------

enum class Realization {
  s_form,  // variable s
  y_form,  // variable y with s = y^3
};

/// Gamma_1..Gamma_3 exactly as realized on functions of s (or of y, s = y^3).
inline DiffOp make_gamma(int index, const Rational& alpha, Realization realization) {
  if (index < 1 || index > 3) throw std::invalid_argument("make_gamma: index must be 1, 2 or 3");
  const GaussRational minus_half_i{Rational(0), Rational(-1, 2)};
  if (realization == Realization::s_form) {
    if (index == 2) {
      // -(i/2)(s d + 1/2)
      return minus_half_i * (DiffOp::term(1, ExpPoly::monomial(1)) + DiffOp::multiply(Rational(1, 2)));
    }
    Rational sign = index == 1 ? Rational(1) : Rational(-1);
    ExpPoly potential = ExpPoly::term(alpha, -2) + ExpPoly::term(sign / 16, 2);
    return DiffOp::derivative(2) + DiffOp::multiply(potential);
  }
  if (index == 2) {
    // -(i/2)((y/3) d + 1/2)
    return minus_half_i *
           (DiffOp::term(1, ExpPoly::term(Rational(1, 3), 1)) + DiffOp::multiply(Rational(1, 2)));
  }
  Rational sign = index == 1 ? Rational(1) : Rational(-1);
  return DiffOp::term(2, ExpPoly::term(Rational(1, 9), -4)) + DiffOp::term(1, ExpPoly::term(Rational(-2, 9), -5)) +
         DiffOp::multiply(ExpPoly::term(alpha, -6) + ExpPoly::term(sign / 16, 6));
}

namespace detail {
inline std::string realization_name(Realization r) { return r == Realization::s_form ? "s-form" : "y-form"; }
}  // namespace detail

/// Checks [G1,G2] = -i G3, [G2,G3] = i G1, [G3,G1] = i G2 as operator identities.
/// `fault_sign` flips the expected right-hand sides; only fault-injection tests use it.
inline VerificationReport check_su11(const Rational& alpha, Realization realization, bool fault_sign = false) {
  const DiffOp g1 = make_gamma(1, alpha, realization);
  const DiffOp g2 = make_gamma(2, alpha, realization);
  const DiffOp g3 = make_gamma(3, alpha, realization);
  const GaussRational i = GaussRational::i();
  const GaussRational s = fault_sign ? GaussRational(-1) : GaussRational(1);

  VerificationReport report;
  auto check = [&](std::string name, const DiffOp& lhs, const DiffOp& rhs) {
    DiffOp residual = lhs - rhs;
    report.add(detail::realization_name(realization) + " alpha=" + alpha.to_string() + " " + std::move(name),
               residual.is_zero(), residual.is_zero() ? std::string{} : residual.render());
  };
  check("[G1,G2]=-iG3", commutator(g1, g2), (-i * s) * g3);
  check("[G2,G3]=iG1", commutator(g2, g3), (i * s) * g1);
  check("[G3,G1]=iG2", commutator(g3, g1), (i * s) * g2);
  return report;
}

struct OperatorDecomposition {
  Rational gamma1_coeff;  // 1/2 + 8b
  Rational gamma3_coeff;  // 1/2 - 8b
  Rational shift;         // c
};

/// Writes d^2 + a/s^2 + b s^2 + c as p1 G1 + p3 G3 + c (alpha = a) and
/// confirms the identity exactly.
inline OperatorDecomposition decompose_operator(const Rational& a, const Rational& b, const Rational& c) {
  OperatorDecomposition d{Rational(1, 2) + 8 * b, Rational(1, 2) - 8 * b, c};
  DiffOp lhs = DiffOp::derivative(2) +
               DiffOp::multiply(ExpPoly::term(a, -2) + ExpPoly::term(b, 2) + ExpPoly(c));
  DiffOp rhs = GaussRational(d.gamma1_coeff) * make_gamma(1, a, Realization::s_form) +
               GaussRational(d.gamma3_coeff) * make_gamma(3, a, Realization::s_form) + DiffOp::multiply(ExpPoly(c));
  if (!(lhs - rhs).is_zero()) {
    throw std::logic_error("decompose_operator: identity failed, residual " + (lhs - rhs).render());
  }
  return d;
}

}  // namespace sgasym
