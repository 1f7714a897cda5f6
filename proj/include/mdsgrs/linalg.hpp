#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdsgrs/gf.hpp"

namespace mdsgrs {

using Vec = std::vector<Felt>;

/// Dense row-major matrix over a finite field.
class MatrixGF {
 public:
  MatrixGF(Field field, std::size_t rows, std::size_t cols);
  MatrixGF(Field field, std::size_t rows, std::size_t cols, std::vector<Felt> entries);

  const Field& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Felt>& entries() const noexcept { return entries_; }

  Felt operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Felt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Felt> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<Felt> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

  static MatrixGF identity(Field field, std::size_t n);
  /// Builds a matrix from equal-length rows. Throws ShapeMismatch otherwise.
  static MatrixGF from_rows(Field field, const std::vector<Vec>& rows);

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return *a.field_ == *b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Felt> entries_;
};

struct Echelon {
  MatrixGF reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// The (n-1) x n system whose row i is (a_1^i, ..., a_n^i). Throws
/// DuplicatePoints on repeated points, InvalidArgument when |a| < 2.
MatrixGF vandermonde_system(const Field& field, std::span<const Felt> points);

/// Reduced row echelon form with leftmost-nonzero pivoting. Zero rows sink to
/// the bottom; the shape is unchanged.
Echelon echelon(const MatrixGF& m);
MatrixGF rref(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);
/// One basis vector per free column, in free-column order, each scaled so its
/// first nonzero coordinate is 1.
std::vector<Vec> nullspace(const MatrixGF& m);
/// Equal canonical forms. Throws ShapeMismatch on differing fields or shapes.
bool row_equivalent(const MatrixGF& a, const MatrixGF& b);
MatrixGF entrywise_power(const MatrixGF& m, std::uint64_t exponent);

MatrixGF transpose(const MatrixGF& m);
MatrixGF multiply(const MatrixGF& a, const MatrixGF& b);
/// m * x for a column vector x.
Vec apply(const MatrixGF& m, std::span<const Felt> x);
Felt dot(const FieldCtx& f, std::span<const Felt> x, std::span<const Felt> y);
bool is_zero(const MatrixGF& m);
bool is_zero(std::span<const Felt> x);
/// Columns picked in the given order.
MatrixGF select_columns(const MatrixGF& m, std::span<const std::size_t> columns);

}  // namespace mdsgrs
