#pragma once

// Exact rational linear algebra: dense matrices with fraction-free rank,
// kernel bases and LU decomposition, and an incremental sparse row echelon
// for the large span computations arising from Lie brackets.
//
// All operations are pure functions on immutable inputs (methods marked
// const never mutate), so concurrent use from multiple threads is safe.

#include "hiconn/rational.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hiconn {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const QMatrix& o) const = default;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool is_zero() const;
  bool is_integral() const;

  std::vector<Rat> row(std::size_t i) const;

  // Rank over Q by fraction-free (Bareiss) elimination on a denominator-
  // cleared integer copy.
  std::size_t rank() const;

  // Basis of the right null space; size() == cols() - rank(), and
  // (*this) * v == 0 exactly for every returned v.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

// Dimension of the span of a set of equal-length vectors; {} -> 0.
// Throws DimensionError on length mismatch.
std::size_t span_dim(const std::vector<std::vector<Rat>>& vectors);

// Row-pivoted LU: lower * upper equals a with rows permuted by perm,
// i.e. (lower*upper)(i,j) == a(perm[i],j) entry for entry.
struct PLU {
  std::vector<std::size_t> perm;
  QMatrix lower;  // unit lower triangular, rows x rows
  QMatrix upper;  // echelon, rows x cols
};
PLU plu_decompose(const QMatrix& a);

// Sparse vector over Q: (column, coefficient) pairs, strictly ascending
// columns, no zero coefficients.
using SparseVec = std::vector<std::pair<std::int64_t, Rat>>;

SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w);

// Incremental exact row-space builder. Stored rows are content-normalized
// integer rows whose leading column is their pivot; pivot columns are
// pairwise distinct, which makes reduction coefficients unique.
class RowEchelon {
 public:
  struct StoredRow {
    std::vector<std::pair<std::int64_t, Int>> ent;  // sorted by column
  };

  // Eliminates leading terms of v against stored rows. Returns the residual
  // (empty iff v was in the row span). If used != nullptr, appends one
  // (ordinal, coefficient) pair per stored row consumed, so that
  // v == sum coeff * row + residual.
  SparseVec reduce(SparseVec v,
                   std::vector<std::pair<long, Rat>>* used = nullptr) const;

  // Inserts v if independent of the stored rows. Returns the new row's
  // ordinal, or -1 when v lies in the span.
  long insert(const SparseVec& v);

  std::size_t rank() const { return rows_.size(); }
  const StoredRow& stored_row(long ordinal) const { return rows_[ordinal]; }

 private:
  std::vector<StoredRow> rows_;
  std::unordered_map<std::int64_t, long> pivot_;  // pivot column -> ordinal
};

}  // namespace hiconn
