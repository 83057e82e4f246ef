#include "wtaut/matrix.hpp"

#include <utility>

#include "wtaut/errors.hpp"

namespace wtaut {

PolyMatrix::PolyMatrix(const std::vector<std::vector<MultiPoly>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DataError("ragged matrix rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

namespace {

using Grid = std::vector<std::vector<MultiPoly>>;

MultiPoly det_grid(Grid g);

Grid minor_of(const Grid& g, std::size_t row, std::size_t col) {
  Grid out;
  out.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == row) continue;
    std::vector<MultiPoly> r;
    r.reserve(g.size() - 1);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != col) r.push_back(g[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

MultiPoly cofactor_expand(const Grid& g) {
  std::size_t n = g.size();
  if (n == 1) return g[0][0];
  if (n == 2) return g[0][0] * g[1][1] - g[0][1] * g[1][0];
  // expand along the sparsest row
  std::size_t best = 0;
  std::size_t best_nonzero = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nz = 0;
    for (const auto& e : g[i]) nz += e.is_zero() ? 0 : 1;
    if (nz < best_nonzero) {
      best_nonzero = nz;
      best = i;
    }
  }
  MultiPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (g[best][j].is_zero()) continue;
    MultiPoly term = g[best][j] * det_grid(minor_of(g, best, j));
    if ((best + j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

MultiPoly bareiss(Grid g) {
  std::size_t n = g.size();
  int sign = 1;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (g[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && g[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(g[k], g[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = g[i][j] * g[k][k] - g[i][k] * g[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step left a remainder");
        g[i][j] = std::move(*q);
      }
      g[i][k] = MultiPoly();
    }
    prev = g[k][k];
  }
  MultiPoly r = g[n - 1][n - 1];
  return sign < 0 ? -r : r;
}

MultiPoly det_grid(Grid g) {
  std::size_t n = g.size();
  if (n == 0) return MultiPoly(1);
  MultiPoly factor(1);
  // Peel off constant pivots: column elimination by a scalar keeps entries polynomial.
  while (n > 0) {
    // A pivot inside an all-constant row keeps the other rows' entries small.
    std::size_t pr = n;
    std::size_t pc = n;
    bool pr_constant = false;
    for (std::size_t i = 0; i < n && !pr_constant; ++i) {
      bool row_constant = true;
      std::size_t col = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!g[i][j].is_constant()) row_constant = false;
        else if (col == n && !g[i][j].is_zero()) col = j;
      }
      if (col == n || (pr != n && !row_constant)) continue;
      pr = i;
      pc = col;
      pr_constant = row_constant;
    }
    if (pr == n) break;
    Rational pivot = g[pr][pc].constant_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pr || g[i][pc].is_zero()) continue;
      MultiPoly scale = g[i][pc] * (1 / pivot);
      for (std::size_t j = 0; j < n; ++j)
        if (j != pc && !g[pr][j].is_zero()) g[i][j] -= scale * g[pr][j];
      g[i][pc] = MultiPoly();
    }
    factor *= pivot;
    if ((pr + pc) % 2 == 1) factor *= Rational(-1);
    g = minor_of(g, pr, pc);
    n = g.size();
  }
  if (n == 0) return factor;
  for (const auto& row : g) {
    bool all_zero = true;
    for (const auto& e : row) all_zero = all_zero && e.is_zero();
    if (all_zero) return {};
  }
  MultiPoly rest = n <= 4 ? cofactor_expand(g) : bareiss(std::move(g));
  return factor * rest;
}

}  // namespace

MultiPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DataError("determinant of a non-square matrix");
  Grid g(m.rows(), std::vector<MultiPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return det_grid(std::move(g));
}

std::size_t rank_over_q(RationalMatrix m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rational> EchelonBasis::reduce(std::vector<Rational> v) const {
  for (const auto& [col, row] : pivots_) {
    if (v[col] == 0) continue;
    Rational f = v[col];
    for (std::size_t j = col; j < dim_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool EchelonBasis::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw DataError("vector length does not match echelon basis dimension");
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  Rational inv = 1 / v[lead];
  for (std::size_t j = lead; j < dim_; ++j) v[j] *= inv;
  // keep existing rows reduced against the new pivot so reduce() stays one pass
  for (auto& [col, row] : pivots_) {
    if (row[lead] == 0) continue;
    Rational f = row[lead];
    for (std::size_t j = lead; j < dim_; ++j) row[j] -= f * v[j];
  }
  pivots_.emplace(lead, std::move(v));
  return true;
}

}  // namespace wtaut
