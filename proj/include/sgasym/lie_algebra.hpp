// Vector fields f(x) d/dx on the line, the generators X = 2D d/dx,
// Y_{-n} = x^{-n} d/dx, Z_{-n} = e^x x^{-n} d/dx, and their commutation table.

#pragma once

#include "sgasym/linalg.hpp"
#include "sgasym/report.hpp"
#include "sgasym/vector_field.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sgasym {

struct LineField {
  ExpPoly coeff;
  friend bool operator==(const LineField&, const LineField&) = default;
};

/// [f d, g d] = (f g' - g f') d
inline LineField vf_commutator(const LineField& a, const LineField& b) {
  return {a.coeff * b.coeff.derive() - b.coeff * a.coeff.derive()};
}

inline LineField gen_x(const Rational& D) { return {ExpPoly(2 * D)}; }
inline LineField gen_y(int n) { return {ExpPoly::monomial(-n)}; }
inline LineField gen_z(int n) { return {ExpPoly::term(1, -n, 1)}; }

struct SpanBasis {
  std::vector<std::string> labels;
  std::vector<LineField> elements;
};

inline SpanBasis make_generators(const Rational& D, int max_n) {
  if (max_n < 0) throw std::invalid_argument("make_generators: max_n must be >= 0");
  SpanBasis b;
  b.labels.push_back("X");
  b.elements.push_back(gen_x(D));
  for (int n = 0; n <= max_n; ++n) {
    b.labels.push_back("Y_-" + std::to_string(n));
    b.elements.push_back(gen_y(n));
  }
  for (int n = 0; n <= max_n; ++n) {
    b.labels.push_back("Z_-" + std::to_string(n));
    b.elements.push_back(gen_z(n));
  }
  return b;
}

struct RelationOptions {
  bool literal = false;     // drop the 2D factors (the table as written for D = 1/2)
  bool fault_sign = false;  // flip the sign in the [Y, Y] family (fail-path fixture)
};

inline std::string relation_name(const std::string& family, int m, int n) {
  return family + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

/// Five relation families for 0 <= m, n <= max_n.
inline VerificationReport verify_relations(const Rational& D, int max_n, RelationOptions opt = {}) {
  VerificationReport rep;
  const GaussRational two_d = opt.literal ? GaussRational(1) : GaussRational(2 * D);
  const LineField X = gen_x(D);
  auto check = [&rep](const std::string& name, const LineField& lhs, const ExpPoly& rhs) {
    ExpPoly diff = lhs.coeff - rhs;
    rep.add(name, diff.is_zero(), diff.is_zero() ? std::string() : "residual " + diff.render());
  };
  for (int n = 0; n <= max_n; ++n) {
    check(relation_name("[Y,X]", 0, n), vf_commutator(gen_y(n), X),
          ExpPoly(gen_y(n + 1).coeff).scale(two_d * GaussRational(n)));
  }
  for (int n = 0; n <= max_n; ++n) {
    ExpPoly rhs = gen_z(n + 1).coeff.scale(GaussRational(n)) - gen_z(n).coeff;
    check(relation_name("[Z,X]", 0, n), vf_commutator(gen_z(n), X), rhs.scale(two_d));
  }
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_n; ++m) {
      int k = opt.fault_sign ? m - n : n - m;
      check(relation_name("[Y,Y]", m, n), vf_commutator(gen_y(n), gen_y(m)),
            gen_y(n + m + 1).coeff.scale(GaussRational(k)));
    }
  }
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      ExpPoly rhs = gen_z(n + m + 1).coeff.scale(GaussRational(m - n)) - gen_z(m + n).coeff;
      check(relation_name("[Z,Y]", m, n), vf_commutator(gen_z(m), gen_y(n)), rhs);
    }
  }
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      // (m - n) e^x Z_{-(n+m+1)}, i.e. (m - n) e^{2x} x^{-(n+m+1)}
      check(relation_name("[Z,Z]", m, n), vf_commutator(gen_z(m), gen_z(n)),
            ExpPoly::term(GaussRational(m - n), -(n + m + 1), 2));
    }
  }
  return rep;
}

struct SpanMembership {
  bool member = false;
  std::vector<std::pair<std::string, GaussRational>> certificate;  // nonzero weights
  std::optional<ExpTerm> offending;                                 // a term outside the span
};

/// Exact membership over the ExpTerm basis: one equation per ExpKey.
inline SpanMembership span_membership(const LineField& field, const SpanBasis& basis) {
  std::set<ExpKey> keys;
  for (const auto& e : basis.elements) {
    for (const auto& [k, c] : e.coeff.terms()) keys.insert(k);
  }
  SpanMembership out;
  for (const auto& [k, c] : field.coeff.terms()) {
    if (!keys.count(k)) {
      out.offending = ExpTerm{c, k};
      return out;
    }
  }
  Matrix<GaussRational> a;
  std::vector<GaussRational> rhs;
  for (const auto& k : keys) {
    std::vector<GaussRational> row;
    for (const auto& e : basis.elements) row.push_back(e.coeff.coefficient(k));
    a.push_back(std::move(row));
    rhs.push_back(field.coeff.coefficient(k));
  }
  auto sol = solve(a, rhs, basis.elements.size());
  if (!sol) {
    // Every key occurs in the basis but the combination is inconsistent.
    auto it = field.coeff.terms().begin();
    if (it != field.coeff.terms().end()) out.offending = ExpTerm{it->second, it->first};
    return out;
  }
  out.member = true;
  for (std::size_t j = 0; j < sol->size(); ++j) {
    if (!(*sol)[j].is_zero()) out.certificate.emplace_back(basis.labels[j], (*sol)[j]);
  }
  return out;
}

}  // namespace sgasym
