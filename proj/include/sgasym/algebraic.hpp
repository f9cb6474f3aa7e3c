// Exact real numbers of the form sum_k q_k sqrt(r_k), where the r_k are
// distinct squarefree positive integers and r = 1 carries the rational part.
// Square roots of distinct squarefree integers are linearly independent over
// Q, so the representation is canonical and the zero test is syntactic.

#pragma once

#include "sgasym/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgasym {

/// n = square * squarefree for n > 0. Returns (squarefree part, sqrt of the square part).
///
/// Trial division runs while p^3 <= the remaining cofactor m; once it stops, m
/// has at most two prime factors, so it is either a perfect square or squarefree.
inline std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: non-positive argument");
  mpz_class m = n;
  mpz_class free = 1;
  mpz_class root = 1;
  for (mpz_class p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
    int count = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++count;
    }
    for (int k = 0; k < count / 2; ++k) root *= p;
    if (count % 2 == 1) free *= p;
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    root *= r;
  } else {
    free *= m;
  }
  return {free, root};
}

class Algebraic {
 public:
  Algebraic() = default;
  Algebraic(Rational r) { add(mpz_class(1), std::move(r)); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Algebraic(T v) : Algebraic(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(r) for rational r >= 0.
  static Algebraic sqrt(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("Algebraic::sqrt: negative radicand " + r.to_string());
    if (r.is_zero()) return {};
    // sqrt(p/q) = sqrt(p q) / q
    auto [free, root] = squarefree_split(r.num() * r.den());
    Algebraic out;
    out.add(free, Rational(root, r.den()));
    return out;
  }

  const std::map<mpz_class, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("Algebraic: value " + to_string() + " is irrational");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  /// Number of distinct irrational radicands.
  std::size_t irrational_count() const {
    return terms_.size() - (terms_.count(mpz_class(1)) ? 1 : 0);
  }

  Algebraic& operator+=(const Algebraic& o) {
    for (const auto& [r, q] : o.terms_) add(r, q);
    return *this;
  }
  Algebraic& operator-=(const Algebraic& o) {
    for (const auto& [r, q] : o.terms_) add(r, -q);
    return *this;
  }
  friend Algebraic operator+(Algebraic a, const Algebraic& b) { return a += b; }
  friend Algebraic operator-(Algebraic a, const Algebraic& b) { return a -= b; }
  friend Algebraic operator-(const Algebraic& a) { return Algebraic() - a; }

  friend Algebraic operator*(const Algebraic& a, const Algebraic& b) {
    Algebraic out;
    for (const auto& [ra, qa] : a.terms_) {
      for (const auto& [rb, qb] : b.terms_) {
        // sqrt(ra) sqrt(rb) = g sqrt((ra/g)(rb/g)) with g = gcd(ra, rb); the
        // product of coprime squarefree numbers is squarefree.
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
        out.add((ra / g) * (rb / g), qa * qb * Rational(g, mpz_class(1)));
      }
    }
    return out;
  }
  Algebraic& operator*=(const Algebraic& o) { return *this = *this * o; }

  /// Inverse of p + q sqrt(r); values with two or more irrational radicands are rejected.
  Algebraic inverse() const {
    if (is_zero()) throw std::domain_error("Algebraic: inverse of zero");
    if (irrational_count() > 1) throw std::domain_error("Algebraic: inverse needs at most one radicand");
    if (is_rational()) return Algebraic(rational_value().inverse());
    Rational p = terms_.count(mpz_class(1)) ? terms_.at(mpz_class(1)) : Rational(0);
    auto it = std::find_if(terms_.begin(), terms_.end(), [](const auto& t) { return t.first != 1; });
    const mpz_class& r = it->first;
    const Rational& q = it->second;
    // 1/(p + q sqrt r) = (p - q sqrt r) / (p^2 - q^2 r)
    Rational norm = p * p - q * q * Rational(r, mpz_class(1));
    Algebraic out;
    out.add(mpz_class(1), p / norm);
    out.add(r, -q / norm);
    return out;
  }
  friend Algebraic operator/(const Algebraic& a, const Algebraic& b) { return a * b.inverse(); }

  friend bool operator==(const Algebraic&, const Algebraic&) = default;

  /// Rational [lo, hi] containing the value with hi - lo <= width.
  std::pair<Rational, Rational> enclosure(const Rational& width) const {
    if (width.sign() <= 0) throw std::invalid_argument("Algebraic::enclosure: width must be positive");
    for (unsigned bits = 64;; bits *= 2) {
      mpz_class scale = mpz_class(1) << bits;
      Rational lo, hi;
      for (const auto& [r, q] : terms_) {
        if (r == 1) {
          lo += q;
          hi += q;
          continue;
        }
        // floor(sqrt(r) * scale) / scale <= sqrt(r) < (floor + 1) / scale
        mpz_class s;
        mpz_class scaled = r * scale * scale;
        mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
        Rational a(s, scale), b(s + 1, scale);
        if (q.sign() > 0) {
          lo += q * a;
          hi += q * b;
        } else {
          lo += q * b;
          hi += q * a;
        }
      }
      if (hi - lo <= width) return {lo, hi};
    }
  }

  int sign() const {
    if (is_zero()) return 0;
    // Nonzero by canonical form, so refinement terminates.
    for (Rational w(1, 1 << 20);; w = w / Rational(1 << 20)) {
      auto [lo, hi] = enclosure(w);
      if (lo.sign() > 0) return 1;
      if (hi.sign() < 0) return -1;
    }
  }

  friend std::strong_ordering operator<=>(const Algebraic& a, const Algebraic& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const {
    auto [lo, hi] = enclosure(Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000));
    return ((lo + hi) / 2).to_double();
  }

  /// Monic minimal polynomial over Q, highest degree first.
  /// Defined for values with at most one irrational radicand.
  std::vector<Rational> minimal_polynomial() const {
    if (irrational_count() > 1) throw std::domain_error("minimal_polynomial: more than one radicand");
    if (is_rational()) return {Rational(1), -rational_value()};
    Rational p = terms_.count(mpz_class(1)) ? terms_.at(mpz_class(1)) : Rational(0);
    auto it = std::find_if(terms_.begin(), terms_.end(), [](const auto& t) { return t.first != 1; });
    Rational q = it->second;
    Rational r(it->first, mpz_class(1));
    // (x - p)^2 = q^2 r
    return {Rational(1), -2 * p, p * p - q * q * r};
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [r, q] : terms_) {
      std::string piece = r == 1 ? q.to_string() : q.to_string() + "*sqrt(" + r.get_str() + ")";
      if (out.empty()) {
        out = piece;
      } else if (piece.front() == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    }
    return out;
  }

 private:
  void add(const mpz_class& radicand, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(radicand, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<mpz_class, Rational> terms_;
};

}  // namespace sgasym
