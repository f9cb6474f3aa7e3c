// Exact linear algebra over Q, Q(i), and Q[t].

#pragma once

#include "sgasym/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace sgasym {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
struct RowEchelon {
  Matrix<F> reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over a field (Rational or GaussRational).
template <typename F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  RowEchelon<F> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Basis of {v : M v = 0}; one vector per free column, with that entry set to 1.
template <typename F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m, std::size_t cols) {
  RowEchelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = F(0) - e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with A x = b (free variables zero), or nullopt when inconsistent.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, std::size_t cols) {
  Matrix<F> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  RowEchelon<F> e = row_reduce(std::move(aug));
  std::vector<F> x(cols, F(0));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.reduced[r][cols];
  }
  return x;
}

/// Linear systems whose entries are polynomials in one parameter t.
struct ParametricNullspace {
  bool generic = false;  // nontrivial kernel for every t
  struct Special {
    Rational t;
    std::vector<std::vector<Rational>> basis;
  };
  std::vector<Special> special;  // rational t where the kernel becomes nontrivial
  UPoly determinant;             // a maximal minor (up to sign) that vanishes at every such t
};

namespace detail {

inline Matrix<Rational> evaluate_at(const Matrix<UPoly>& m, const Rational& t) {
  Matrix<Rational> out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& p : row) r.push_back(p(t));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Finds the rational parameter values t at which M(t) v = 0 has nontrivial
/// solutions. Fraction-free (Bareiss) elimination over Q[t] gives the generic
/// rank; when it is full, the last pivot is a maximal minor and its rational
/// roots are the only candidates, each confirmed by an exact kernel over Q.
inline ParametricNullspace parametric_nullspace(Matrix<UPoly> m, std::size_t cols) {
  ParametricNullspace out;
  const std::size_t rows = m.size();
  UPoly prev(1);
  std::size_t rank = 0;
  UPoly last_pivot(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        UPoly num = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        auto [q, r] = divmod(num, prev);
        if (!r.is_zero()) throw std::logic_error("parametric_nullspace: inexact Bareiss division");
        m[i][j] = std::move(q);
      }
      m[i][c] = UPoly();
    }
    prev = m[rank][c];
    last_pivot = prev;
    ++rank;
  }
  if (rank < cols) {
    out.generic = true;
    return out;
  }
  out.determinant = last_pivot;
  return out;
}

inline ParametricNullspace parametric_nullspace_with_roots(const Matrix<UPoly>& m, std::size_t cols) {
  ParametricNullspace out = parametric_nullspace(m, cols);
  if (out.generic) return out;
  for (const Rational& t : rational_roots(out.determinant)) {
    auto basis = nullspace(detail::evaluate_at(m, t), cols);
    if (!basis.empty()) out.special.push_back({t, std::move(basis)});
  }
  return out;
}

}  // namespace sgasym
