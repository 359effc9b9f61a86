#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rook/rational.hpp"

namespace rook {

/// Sparse vector over the rationals. Entries are kept sorted by index and
/// never store zero.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  /// Entries may be unsorted and contain duplicates (summed) or zeros (dropped).
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  static SparseVector from_dense(const std::vector<Rational>& dense);
  static SparseVector unit(std::size_t dim, std::size_t i);

  std::size_t dimension() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational operator[](std::size_t i) const;
  std::vector<Rational> to_dense() const;

  SparseVector& operator*=(const Rational& c);
  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Coordinate-format sparse matrix; triplets are sorted row-major, unique and
/// nonzero.
class SparseRationalMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Rational value;
    friend bool operator==(const Triplet&, const Triplet&) = default;
  };

  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Duplicated coordinates are summed; zero results are dropped.
  SparseRationalMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  static SparseRationalMatrix identity(std::size_t n);
  static SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Triplet>& triplets() const { return triplets_; }
  std::size_t nnz() const { return triplets_.size(); }
  bool is_zero() const { return triplets_.empty(); }

  Rational at(std::size_t r, std::size_t c) const;
  /// Nonzero rows only, in row order, each paired with its row index.
  std::vector<std::pair<std::size_t, SparseVector>> row_vectors() const;

  SparseVector operator*(const SparseVector& x) const;
  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  SparseRationalMatrix scaled(const Rational& c) const;

  friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> triplets_;
};

/// A subspace of Q^dim held in reduced row echelon form. The reduced form
/// depends only on the span, never on insertion order.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(std::size_t dim);

  std::size_t ambient_dimension() const { return dim_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Adds v to the span. Returns true iff the span grew.
  /// Throws std::invalid_argument on a dimension mismatch.
  bool insert(const SparseVector& v);
  /// v minus its projection onto the pivot coordinates; zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  /// Every basis row of `other` lies in this span.
  bool contains(const SpanBasis& other) const;

  /// Rows sorted by pivot column; each row has a 1 at its pivot and zeros in
  /// every other pivot column.
  std::vector<SparseVector> rows() const;
  std::vector<std::size_t> pivot_columns() const;

  /// Basis of {x : r.x = 0 for every basis row r}, one vector per free column.
  std::vector<SparseVector> kernel() const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> rows_;          // insertion order
  std::vector<std::ptrdiff_t> pivot_row_;   // column -> index into rows_, -1 if free
  std::vector<std::size_t> pivot_col_;      // index into rows_ -> pivot column
};

/// Functional form of SpanBasis::insert.
std::pair<SpanBasis, bool> span_insert(SpanBasis b, const SparseVector& v);
bool span_contains(const SpanBasis& b, const SparseVector& v);
/// Mutual containment.
bool span_equal(const SpanBasis& a, const SpanBasis& b);

/// Row space of the given rows in reduced echelon form. Rows are deduplicated
/// and reduced in independent chunks on OpenMP threads, then merged; the
/// result equals serial::row_reduce exactly. `chunks == 0` picks one chunk
/// per thread.
SpanBasis row_reduce(const std::vector<SparseVector>& rows, std::size_t dim, int chunks = 0);

SpanBasis row_space(const SparseRationalMatrix& m);
std::size_t rank(const SparseRationalMatrix& m);
/// Basis of {x : Mx = 0}; size cols - rank.
std::vector<SparseVector> nullspace(const SparseRationalMatrix& m);

}  // namespace rook
