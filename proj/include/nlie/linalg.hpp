#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon data from fraction-free elimination.
struct Echelon {
  RationalMatrix reduced;             // rank rows, leading 1 in each pivot column
  std::vector<std::size_t> pivots;    // pivot column per row
  std::size_t rank() const { return pivots.size(); }
};

/// Row-reduces with Bareiss elimination on integer-scaled rows, then
/// normalizes to reduced echelon form over Q.
Echelon echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Determinant of a square matrix (1 for the empty matrix).
Rational determinant(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Incrementally maintained row space for membership and coordinate queries.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  /// Reduced rows, each with a leading 1 at pivots()[i].
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves sum_k x_k columns[k] = target for independent columns. Returns
/// nullopt when target is outside their span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target);

}  // namespace nlie
