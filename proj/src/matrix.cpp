#include "lrpoly/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lrpoly {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

MatrixQ MatrixQ::from_int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_int_rows(v);
}

MatrixQ MatrixQ::from_int_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

MatrixQ MatrixQ::from_columns(const std::vector<std::vector<Rational>>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  MatrixQ m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("columns of unequal length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> MatrixQ::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> MatrixQ::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

MatrixQ MatrixQ::select_columns(std::span<const std::size_t> cols) const {
  MatrixQ m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(r, cols[c]);
  return m;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

MatrixQ MatrixQ::augment(std::span<const Rational> column) const {
  if (column.size() != rows_) throw std::invalid_argument("augment: column length mismatch");
  MatrixQ m(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    m(r, cols_) = column[r];
  }
  return m;
}

std::vector<Rational> MatrixQ::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * x[c];
  return out;
}

RrefResult rref(const MatrixQ& m) {
  RrefResult result{m, 0, {}};
  MatrixQ& a = result.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    result.pivots.push_back(col);
    ++row;
  }
  result.rank = row;
  return result;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  MatrixQ a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve_unique(const MatrixQ& m, std::span<const Rational> rhs) {
  const RrefResult red = rref(m.augment(rhs));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  if (red.rank != m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return x;
}

std::vector<std::vector<Rational>> null_space(const MatrixQ& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_nonneg_combination(const MatrixQ& columns,
                                                              std::span<const Rational> target) {
  if (columns.cols() == 0) throw std::invalid_argument("solve_nonneg_combination: no columns");
  if (target.size() != columns.rows())
    throw std::invalid_argument("solve_nonneg_combination: target length != row count");

  const std::size_t r = rank(columns);
  if (rank(columns.augment(target)) != r) return std::nullopt;

  std::optional<std::vector<Rational>> found;
  for_each_subset(columns.cols(), r, [&](std::span<const std::size_t> subset) {
    const MatrixQ sub = columns.select_columns(subset);
    if (rank(sub) != r) return true;
    // Full column rank r and target in the column span: the solution is unique.
    const auto x = solve_unique(sub, target);
    if (!x) return true;
    for (const Rational& xi : *x)
      if (sgn(xi) < 0) return true;
    std::vector<Rational> full(columns.cols(), Rational(0));
    for (std::size_t i = 0; i < subset.size(); ++i) full[subset[i]] = (*x)[i];
    found = std::move(full);
    return false;
  });
  return found;
}

}  // namespace lrpoly
