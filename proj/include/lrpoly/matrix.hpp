#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lrpoly/rational.hpp"

namespace lrpoly {

/// Dense row-major matrix of exact rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);
  static MatrixQ from_int_rows(std::initializer_list<std::initializer_list<long>> rows);
  static MatrixQ from_int_rows(const std::vector<std::vector<long>>& rows);
  /// Matrix whose columns are the given vectors (all of equal length).
  static MatrixQ from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;
  MatrixQ select_columns(std::span<const std::size_t> cols) const;
  MatrixQ transpose() const;

  /// Appends the given column on the right.
  MatrixQ augment(std::span<const Rational> column) const;

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  bool operator==(const MatrixQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  MatrixQ reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Square matrices only; throws std::invalid_argument otherwise.
Rational determinant(const MatrixQ& m);

/// Unique solution of m·x = rhs, or nullopt when the system is inconsistent
/// or has a nontrivial kernel.
std::optional<std::vector<Rational>> solve_unique(const MatrixQ& m, std::span<const Rational> rhs);

/// Basis of {x : m·x = 0}, one vector per free column, in free-column order.
std::vector<std::vector<Rational>> null_space(const MatrixQ& m);

/// Finds x >= 0 with columns·x = target, if one exists.
///
/// Searches basic solutions only (Caratheodory): every linearly independent
/// column subset of size rank(columns) is solved exactly and the first
/// nonnegative solution, in lexicographic subset order, is returned.
/// Throws std::invalid_argument when there are no columns or the target
/// length differs from the row count.
std::optional<std::vector<Rational>> solve_nonneg_combination(const MatrixQ& columns,
                                                              std::span<const Rational> target);

/// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when visit returns false.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace lrpoly
