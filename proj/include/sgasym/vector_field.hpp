// Polynomials in (u, p = u') with ExpPoly coefficients in x, and point vector
// fields xi(x,u) d/dx + eta(x,u) d/du built from them.

#pragma once

#include "sgasym/expoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgasym {

class UPPoly {
 public:
  using Key = std::pair<int, int>;  // (power of u, power of p)

  UPPoly() = default;

  static UPPoly monomial(int u_power, int p_power, const ExpPoly& f) {
    UPPoly out;
    out.add(Key{u_power, p_power}, f);
    return out;
  }
  static UPPoly constant(const ExpPoly& f) { return monomial(0, 0, f); }
  static UPPoly u() { return monomial(1, 0, ExpPoly(1)); }
  static UPPoly p() { return monomial(0, 1, ExpPoly(1)); }
  /// sum_k coeffs[k] u^k
  static UPPoly in_u(const std::vector<ExpPoly>& coeffs) {
    UPPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.add(Key{static_cast<int>(k), 0}, coeffs[k]);
    return out;
  }

  const std::map<Key, ExpPoly>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  ExpPoly coefficient(int u_power, int p_power = 0) const {
    auto it = c_.find(Key{u_power, p_power});
    return it == c_.end() ? ExpPoly() : it->second;
  }
  int degree_u() const {
    int d = -1;
    for (const auto& [k, f] : c_) d = std::max(d, k.first);
    return d;
  }
  int degree_p() const {
    int d = -1;
    for (const auto& [k, f] : c_) d = std::max(d, k.second);
    return d;
  }

  UPPoly& operator+=(const UPPoly& o) {
    for (const auto& [k, f] : o.c_) add(k, f);
    return *this;
  }
  UPPoly& operator-=(const UPPoly& o) {
    for (const auto& [k, f] : o.c_) add(k, -f);
    return *this;
  }
  UPPoly& scale(const GaussRational& s) {
    if (s.is_zero()) c_.clear();
    for (auto& [k, f] : c_) f.scale(s);
    return *this;
  }
  friend UPPoly operator+(UPPoly a, const UPPoly& b) { return a += b; }
  friend UPPoly operator-(UPPoly a, const UPPoly& b) { return a -= b; }
  friend UPPoly operator-(UPPoly a) { return a.scale(GaussRational(-1)); }
  friend UPPoly operator*(const UPPoly& a, const UPPoly& b) {
    UPPoly out;
    for (const auto& [ka, fa] : a.c_) {
      for (const auto& [kb, fb] : b.c_) out.add(Key{ka.first + kb.first, ka.second + kb.second}, fa * fb);
    }
    return out;
  }
  friend bool operator==(const UPPoly&, const UPPoly&) = default;

  UPPoly dx() const {
    UPPoly out;
    for (const auto& [k, f] : c_) out.add(k, f.derive());
    return out;
  }
  UPPoly du() const {
    UPPoly out;
    for (const auto& [k, f] : c_) {
      if (k.first > 0) out.add(Key{k.first - 1, k.second}, ExpPoly(f).scale(GaussRational(k.first)));
    }
    return out;
  }
  UPPoly dp() const {
    UPPoly out;
    for (const auto& [k, f] : c_) {
      if (k.second > 0) out.add(Key{k.first, k.second - 1}, ExpPoly(f).scale(GaussRational(k.second)));
    }
    return out;
  }

  /// "u^2·p·[...]" pieces joined by " + "; "0" when empty.
  std::string render() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [k, f] : c_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      if (k.first > 0) mono += k.first == 1 ? "u" : "u^" + std::to_string(k.first);
      if (k.second > 0) {
        if (!mono.empty()) mono += kMiddleDot;
        mono += k.second == 1 ? "p" : "p^" + std::to_string(k.second);
      }
      if (!mono.empty()) mono += kMiddleDot;
      out += mono + "[" + f.render() + "]";
    }
    return out;
  }

 private:
  void add(const Key& k, const ExpPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(k, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  std::map<Key, ExpPoly> c_;
};

/// X = xi(x,u) d/dx + eta(x,u) d/du.
struct VectorField {
  UPPoly xi;
  UPPoly eta;

  static VectorField from_u(const std::vector<ExpPoly>& xi_by_u, const std::vector<ExpPoly>& eta_by_u) {
    return {UPPoly::in_u(xi_by_u), UPPoly::in_u(eta_by_u)};
  }

  bool is_zero() const { return xi.is_zero() && eta.is_zero(); }
  friend bool operator==(const VectorField&, const VectorField&) = default;
  friend VectorField operator+(const VectorField& a, const VectorField& b) { return {a.xi + b.xi, a.eta + b.eta}; }
  friend VectorField operator-(const VectorField& a, const VectorField& b) { return {a.xi - b.xi, a.eta - b.eta}; }
  VectorField& scale(const GaussRational& s) {
    xi.scale(s);
    eta.scale(s);
    return *this;
  }

  std::string render() const { return "xi = " + xi.render() + "; eta = " + eta.render(); }
};

/// [A, B] of two point fields: xi = A(B.xi) - B(A.xi), eta = A(B.eta) - B(A.eta).
inline VectorField vf2_commutator(const VectorField& a, const VectorField& b) {
  if (a.xi.degree_p() > 0 || a.eta.degree_p() > 0 || b.xi.degree_p() > 0 || b.eta.degree_p() > 0) {
    throw std::invalid_argument("vf2_commutator: fields must not depend on u'");
  }
  auto apply = [](const VectorField& f, const UPPoly& g) { return f.xi * g.dx() + f.eta * g.du(); };
  return {apply(a, b.xi) - apply(b, a.xi), apply(a, b.eta) - apply(b, a.eta)};
}

}  // namespace sgasym
