// Dense univariate polynomials over Q and exact rational root finding.

#pragma once

#include "sgasym/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgasym {

class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  UPoly(T constant) : UPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients in ascending degree.
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly variable() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return UPoly(std::move(d));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// (quotient, remainder) with deg remainder < deg divisor.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    UPoly rem = a;
    std::vector<Rational> quot(std::max(0, a.degree() - b.degree() + 1));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      Rational factor = rem.leading() / b.leading();
      quot[shift] = factor;
      for (int k = 0; k <= b.degree(); ++k) rem.c_[k + shift] -= factor * b.c_[k];
      rem.trim();
    }
    return {UPoly(std::move(quot)), rem};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    Rational lead = leading();
    std::vector<Rational> out = c_;
    for (auto& q : out) q /= lead;
    return UPoly(std::move(out));
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k].is_zero()) continue;
      std::string coeff = c_[k].to_string();
      if (!out.empty()) out += coeff.front() == '-' ? " - " : " + ";
      if (!out.empty() && coeff.front() == '-') coeff.erase(0, 1);
      out += coeff;
      if (k >= 1) out += "*" + var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

// Sign of p at an integer point.
inline int sign_at(const std::vector<mpz_class>& p, const mpz_class& y) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + *it;
  return sgn(acc);
}

inline int sign_changes(const std::vector<std::vector<mpz_class>>& seq, const mpz_class& y) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, y);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer coefficients (ascending) proportional to p.
inline std::vector<mpz_class> integer_coeffs(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& q : p.coeffs()) out.push_back(q.num() * (l / q.den()));
  return out;
}

}  // namespace detail

/// All distinct rational roots of p (p != 0), ascending.
///
/// With p squarefree and integral, y = a_d x turns p into a monic integer
/// polynomial whose rational roots are integers. Its real roots are isolated
/// by Sturm counts on integer intervals (lo, hi] until hi - lo = 1, and hi is
/// then tested exactly.
inline std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  if (p.degree() == 0) return {};
  UPoly sqfree = divmod(p, gcd(p, p.derivative())).first;
  std::vector<mpz_class> a = detail::integer_coeffs(sqfree);
  const int d = static_cast<int>(a.size()) - 1;
  const mpz_class lead = a[d];

  std::vector<Rational> monic_coeffs(d + 1);
  mpz_class power = 1;  // lead^(d-1-k), built from k = d-1 downwards
  monic_coeffs[d] = Rational(1);
  for (int k = d - 1; k >= 0; --k) {
    monic_coeffs[k] = Rational(a[k] * power, mpz_class(1));
    power *= lead;
  }
  UPoly monic(monic_coeffs);

  std::vector<std::vector<mpz_class>> sturm;
  {
    UPoly s0 = monic;
    UPoly s1 = monic.derivative();
    sturm.push_back(detail::integer_coeffs(s0));
    while (!s1.is_zero()) {
      sturm.push_back(detail::integer_coeffs(s1));
      UPoly r = -divmod(s0, s1).second;
      s0 = std::move(s1);
      s1 = std::move(r);
    }
    // integer_coeffs rescales by a positive factor, so signs are preserved.
  }

  mpz_class bound = 1;
  for (int k = 0; k < d; ++k) {
    mpz_class c = abs(monic_coeffs[k].num());
    if (c > bound) bound = c;
  }
  bound += 1;

  std::vector<Rational> roots;
  std::vector<std::pair<mpz_class, mpz_class>> stack{{-bound - 1, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int count = detail::sign_changes(sturm, lo) - detail::sign_changes(sturm, hi);
    if (count <= 0) continue;
    if (hi - lo == 1) {
      if (detail::sign_at(sturm.front(), hi) == 0) roots.push_back(Rational(hi, lead));
      continue;
    }
    mpz_class mid;
    mpz_class sum = lo + hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sgasym
