// Exact rationals and Gaussian rationals.
//
// Rational wraps GMP's mpq_class so that every value is kept in lowest
// terms with a positive denominator. GaussRational is the pair (re, im)
// over Rational; it carries the imaginary unit needed by the su(1,1)
// generators and by complex-exponential forms of sin/cos.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgasym {

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(mpz_from(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(mpz_from(num), mpz_from(den));
    q_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q" or an integer, with an optional leading sign.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1")
                                                                : text.substr(slash + 1);
    mpz_class num = parse_integer(num_text, text);
    mpz_class den = parse_integer(den_text, text);
    if (slash != std::string_view::npos && (den_text.front() == '-' || den_text.front() == '+')) {
      throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  long double to_long_double() const {
    // get_d truncates to double; a long double quotient of the parts keeps a
    // few extra bits for numeric cross-checks.
    return static_cast<long double>(q_.get_num().get_d()) /
           static_cast<long double>(q_.get_den().get_d());
  }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(q_.get_den(), q_.get_num()));
  }

  Rational pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
  }

  Rational floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(f, mpz_class(1));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  template <std::integral T>
  static mpz_class mpz_from(T value) {
    if constexpr (sizeof(T) <= sizeof(long)) {
      if constexpr (std::is_signed_v<T>) {
        return mpz_class(static_cast<long>(value));
      } else {
        return mpz_class(static_cast<unsigned long>(value));
      }
    } else {
      return mpz_class(std::to_string(value));
    }
  }

  static mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw std::invalid_argument("Rational: malformed '" + std::string(whole) + "'");
    for (char c : body) {
      if (c < '0' || c > '9') throw std::invalid_argument("Rational: malformed '" + std::string(whole) + "'");
    }
    std::string s(digits);
    if (s.front() == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  }

  mpq_class q_;
};

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussRational(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a", "bi", "a+bi", "a-bi" with rational a, b ("i" alone means 1i).
  static GaussRational parse(std::string_view text) {
    std::string s(text);
    std::erase(s, ' ');
    if (s.empty()) throw std::invalid_argument("GaussRational: empty");
    if (s.back() != 'i') return GaussRational(Rational::parse(s));
    s.pop_back();
    // Split at the last sign that is not the leading character.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') { split = k; break; }
    }
    auto imag_of = [](std::string t) {
      if (t.empty() || t == "+") return Rational(1);
      if (t == "-") return Rational(-1);
      return Rational::parse(t);
    };
    if (split == std::string::npos) return {Rational(0), imag_of(s)};
    return {Rational::parse(s.substr(0, split)), imag_of(s.substr(split))};
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("GaussRational: inverse of zero");
    return {re_ / n, -im_ / n};
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return im_.to_string() + "i";
    std::string out = re_.to_string();
    out += im_.sign() < 0 ? "-" : "+";
    out += im_.abs().to_string() + "i";
    return out;
  }

  GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussRational&, const GaussRational&) = default;
  friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace sgasym
