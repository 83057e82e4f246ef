#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wtaut/poly.hpp"
#include "wtaut/rational.hpp"

namespace wtaut {

/// Dense rectangular matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws DataError on ragged input.
  explicit PolyMatrix(const std::vector<std::vector<MultiPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> entries_;
};

/// Exact determinant. Rows with constant entries are eliminated first; the
/// remaining block uses cofactor expansion up to 4x4 and fraction-free
/// (Bareiss) elimination beyond. Throws DataError if not square.
MultiPoly det(const PolyMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank_over_q(RationalMatrix m);

/// Row-echelon basis of a subspace of Q^n that grows one vector at a time.
/// Pivots are the leftmost nonzero columns, so callers that want to
/// eliminate "large" coordinates should order columns largest-first.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v to the spanning set; returns true if the rank grew.
  bool insert(std::vector<Rational> v);
  /// Canonical representative of v modulo the span: zero on every pivot column.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  // pivot column -> row with a 1 at that column and zeros to its left
  std::map<std::size_t, std::vector<Rational>> pivots_;
};

}  // namespace wtaut
