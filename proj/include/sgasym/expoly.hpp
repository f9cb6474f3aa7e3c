// The exp-monomial function ring.
//
// An ExpPoly is a finite sum of terms q * x^r * exp(l*x + k*x^2) with
// Gaussian-rational q, l, k and rational r. Terms are stored in a map keyed
// by (l, k, r), which keeps the representation canonical: two ExpPolys are
// equal as functions on x > 0 iff their maps are equal.
//
// Text form (used in reports and test fixtures):
//
//   0                                   the zero function
//   (q)                                 a constant
//   (q)·x^(r)·exp((l)x+(k)x^2)          a general term; factors with r = 0
//                                       or l = k = 0 are omitted
//   t1 + t2 + ...                       sums, in canonical key order
//
// q, l, k are written "a", "bi", "a+bi" or "a-bi"; r as "p/q" or an integer.

#pragma once

#include "sgasym/rational.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgasym {

inline constexpr std::string_view kMiddleDot = "\xC2\xB7";

struct ExpKey {
  GaussRational lin;   // coefficient of x in the exponent
  GaussRational quad;  // coefficient of x^2 in the exponent
  Rational power;      // r in x^r

  bool has_exponential() const { return !lin.is_zero() || !quad.is_zero(); }
  friend bool operator==(const ExpKey&, const ExpKey&) = default;
  friend auto operator<=>(const ExpKey&, const ExpKey&) = default;
};

struct ExpTerm {
  GaussRational coeff;
  ExpKey key;
};

namespace detail {

inline std::string render_exponent(const ExpKey& key) {
  std::string out;
  if (!key.lin.is_zero()) out += "(" + key.lin.to_string() + ")x";
  if (!key.quad.is_zero()) {
    if (!out.empty()) out += "+";
    out += "(" + key.quad.to_string() + ")x^2";
  }
  return out;
}

inline std::string render_term(const GaussRational& coeff, const ExpKey& key) {
  std::string out = "(" + coeff.to_string() + ")";
  if (!key.power.is_zero()) {
    out += kMiddleDot;
    out += "x^(" + key.power.to_string() + ")";
  }
  if (key.has_exponential()) {
    out += kMiddleDot;
    out += "exp(" + render_exponent(key) + ")";
  }
  return out;
}

// Splits on `sep` only where parentheses and brackets are balanced.
inline std::vector<std::string_view> split_top_level(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && text.compare(k, sep.size(), sep) == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + sep.size();
      k = start - 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  parts.push_back(text.substr(start));
  return parts;
}

inline std::string_view strip_parens(std::string_view s, std::string_view whole) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("expected parenthesised value in '" + std::string(whole) + "'");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace detail

class ExpPoly {
 public:
  using TermMap = std::map<ExpKey, GaussRational>;

  ExpPoly() = default;
  ExpPoly(GaussRational constant) { add_term(std::move(constant), ExpKey{}); }  // NOLINT
  ExpPoly(Rational constant) : ExpPoly(GaussRational(std::move(constant))) {}  // NOLINT
  template <std::integral T>
  ExpPoly(T constant) : ExpPoly(GaussRational(constant)) {}  // NOLINT

  static ExpPoly term(GaussRational coeff, Rational power, GaussRational lin = {}, GaussRational quad = {}) {
    ExpPoly f;
    f.add_term(std::move(coeff), ExpKey{std::move(lin), std::move(quad), std::move(power)});
    return f;
  }
  /// x^r
  static ExpPoly monomial(Rational power) { return term(1, std::move(power)); }
  /// exp(l*x + k*x^2)
  static ExpPoly exponential(GaussRational lin, GaussRational quad = {}) {
    return term(1, Rational(0), std::move(lin), std::move(quad));
  }
  /// sin(k*x) = (e^{ikx} - e^{-ikx}) / (2i)
  static ExpPoly sin(const Rational& k) {
    GaussRational half_i{Rational(0), Rational(1, 2)};
    return term(-half_i, 0, GaussRational(0, k)) + term(half_i, 0, GaussRational(0, -k));
  }
  /// cos(k*x) = (e^{ikx} + e^{-ikx}) / 2
  static ExpPoly cos(const Rational& k) {
    return term(Rational(1, 2), 0, GaussRational(0, k)) + term(Rational(1, 2), 0, GaussRational(0, -k));
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussRational coefficient(const ExpKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussRational{} : it->second;
  }
  /// Coefficient of the pure power x^r.
  GaussRational coefficient(const Rational& power) const { return coefficient(ExpKey{{}, {}, power}); }

  bool is_real() const {
    for (const auto& [key, c] : terms_) {
      if (!c.is_real() || !key.lin.is_real() || !key.quad.is_real()) return false;
    }
    return true;
  }

  ExpPoly& operator+=(const ExpPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key);
    return *this;
  }
  ExpPoly& scale(const GaussRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator-(ExpPoly a) { return a.scale(GaussRational(-1)); }

  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    if (b.terms_.size() == 1 && b.terms_.begin()->first == ExpKey{}) return ExpPoly(a).scale(b.terms_.begin()->second);
    if (a.terms_.size() == 1 && a.terms_.begin()->first == ExpKey{}) return ExpPoly(b).scale(a.terms_.begin()->second);
    ExpPoly out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        out.add_term(ca * cb, ExpKey{ka.lin + kb.lin, ka.quad + kb.quad, ka.power + kb.power});
      }
    }
    return out;
  }
  ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  /// d/dx of q x^r e^P is q (r x^{r-1} + P'(x) x^r) e^P.
  ExpPoly derive() const {
    ExpPoly out;
    for (const auto& [key, c] : terms_) {
      if (!key.power.is_zero()) {
        out.add_term(c * GaussRational(key.power), ExpKey{key.lin, key.quad, key.power - 1});
      }
      if (!key.lin.is_zero()) out.add_term(c * key.lin, key);
      if (!key.quad.is_zero()) {
        out.add_term(c * key.quad * GaussRational(2), ExpKey{key.lin, key.quad, key.power + 1});
      }
    }
    return out;
  }

  ExpPoly derive(int order) const {
    ExpPoly f = *this;
    for (int k = 0; k < order; ++k) f = f.derive();
    return f;
  }

  std::complex<long double> evaluate(long double x) const {
    using C = std::complex<long double>;
    auto as_complex = [](const GaussRational& g) { return C(g.re().to_long_double(), g.im().to_long_double()); };
    C sum = 0;
    for (const auto& [key, c] : terms_) {
      C exponent = as_complex(key.lin) * x + as_complex(key.quad) * x * x;
      sum += as_complex(c) * std::pow(x, key.power.to_long_double()) * std::exp(exponent);
    }
    return sum;
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += detail::render_term(c, key);
    }
    return out;
  }

  static ExpPoly parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "0") return {};
    ExpPoly out;
    for (std::string_view piece : detail::split_top_level(text, " + ")) {
      auto factors = detail::split_top_level(piece, kMiddleDot);
      GaussRational coeff = GaussRational::parse(detail::strip_parens(factors.front(), piece));
      ExpKey key;
      for (std::size_t k = 1; k < factors.size(); ++k) {
        std::string_view f = factors[k];
        if (f.starts_with("x^")) {
          key.power = Rational::parse(detail::strip_parens(f.substr(2), piece));
        } else if (f.starts_with("exp")) {
          std::string_view inner = detail::strip_parens(f.substr(3), piece);
          for (std::string_view part : detail::split_top_level(inner, "+")) {
            auto close = part.rfind(')');
            if (close == std::string_view::npos) throw std::invalid_argument("bad exponent '" + std::string(piece) + "'");
            GaussRational value = GaussRational::parse(detail::strip_parens(part.substr(0, close + 1), piece));
            std::string_view var = part.substr(close + 1);
            if (var == "x") {
              key.lin = value;
            } else if (var == "x^2") {
              key.quad = value;
            } else {
              throw std::invalid_argument("bad exponent variable in '" + std::string(piece) + "'");
            }
          }
        } else {
          throw std::invalid_argument("unknown factor '" + std::string(f) + "'");
        }
      }
      out.add_term(coeff, key);
    }
    return out;
  }

  void add_term(GaussRational coeff, const ExpKey& key) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  TermMap terms_;
};

inline ExpPoly derive(const ExpPoly& f) { return f.derive(); }

inline std::string render(const ExpTerm& t) { return detail::render_term(t.coeff, t.key); }

}  // namespace sgasym
