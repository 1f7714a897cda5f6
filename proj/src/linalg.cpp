#include "mdsgrs/linalg.hpp"

#include <algorithm>
#include <string>

#include "mdsgrs/error.hpp"

namespace mdsgrs {

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixGF::MatrixGF(Field field, std::size_t rows, std::size_t cols, std::vector<Felt> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows * cols");
  for (Felt x : entries_)
    if (x.index >= field_->q()) throw Error(ErrorKind::InvalidArgument, "entry outside the field");
}

MatrixGF MatrixGF::identity(Field field, std::size_t n) {
  MatrixGF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Felt{1};
  return m;
}

MatrixGF MatrixGF::from_rows(Field field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Felt> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return MatrixGF(std::move(field), rows.size(), cols, std::move(entries));
}

MatrixGF vandermonde_system(const Field& field, std::span<const Felt> points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two points");
  Vec sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicatePoints, "evaluation points must be distinct");

  const FieldCtx& f = *field;
  MatrixGF m(field, n - 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    Felt power = f.one();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      m(i, j) = power;
      power = f.mul(power, points[j]);
    }
  }
  return m;
}

Echelon echelon(const MatrixGF& m) {
  const FieldCtx& f = m.ctx();
  MatrixGF r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).index == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row)
      std::swap_ranges(r.row(pivot).begin(), r.row(pivot).end(), r.row(row).begin());

    const Felt scale = f.inv(r(row, col));
    for (Felt& x : r.row(row)) x = f.mul(x, scale);

    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Felt factor = r(i, col);
      if (factor.index == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r(i, j) = f.sub(r(i, j), f.mul(factor, r(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

MatrixGF rref(const MatrixGF& m) { return echelon(m).reduced; }

std::size_t rank(const MatrixGF& m) { return echelon(m).pivots.size(); }

std::vector<Vec> nullspace(const MatrixGF& m) {
  const FieldCtx& f = m.ctx();
  const auto [r, pivots] = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(r(i, free));
    const auto lead = std::find_if(x.begin(), x.end(), [](Felt v) { return v.index != 0; });
    const Felt scale = f.inv(*lead);
    for (Felt& v : x) v = f.mul(v, scale);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool row_equivalent(const MatrixGF& a, const MatrixGF& b) {
  if (!(*a.field() == *b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "row equivalence needs matching field and shape");
  return rref(a) == rref(b);
}

MatrixGF entrywise_power(const MatrixGF& m, std::uint64_t exponent) {
  MatrixGF out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m.ctx().pow(m(i, j), static_cast<std::int64_t>(exponent));
  return out;
}

MatrixGF transpose(const MatrixGF& m) {
  MatrixGF t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

MatrixGF multiply(const MatrixGF& a, const MatrixGF& b) {
  if (!(*a.field() == *b.field()) || a.cols() != b.rows())
    throw Error(ErrorKind::ShapeMismatch, "incompatible matrix product");
  const FieldCtx& f = a.ctx();
  MatrixGF c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Felt s = a(i, l);
      if (s.index == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(s, b(l, j)));
    }
  return c;
}

Vec apply(const MatrixGF& m, std::span<const Felt> x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "vector length mismatch");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.ctx(), m.row(i), x);
  return out;
}

Felt dot(const FieldCtx& f, std::span<const Felt> x, std::span<const Felt> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "dot product length mismatch");
  Felt acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

bool is_zero(std::span<const Felt> x) {
  return std::all_of(x.begin(), x.end(), [](Felt v) { return v.index == 0; });
}

bool is_zero(const MatrixGF& m) { return is_zero(std::span<const Felt>(m.entries())); }

MatrixGF select_columns(const MatrixGF& m, std::span<const std::size_t> columns) {
  MatrixGF out(m.field(), m.rows(), columns.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = m(i, columns[j]);
  return out;
}

}  // namespace mdsgrs
