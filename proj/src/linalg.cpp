#include "nlie/linalg.hpp"

#include "nlie/error.hpp"

namespace nlie {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DomainError("row length differs from matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

// Integer rows with the same row space as m (each row scaled by the lcm of
// its denominators).
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      row[c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Echelon echelon(const RationalMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  Echelon e{RationalMatrix(rk, cols), pivots};
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0) e.reduced(r, c) = ratio(a[r][c], a[r][pivots[r]]);
  // Back substitution to reduced form.
  for (std::size_t r = rk; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = e.reduced(above, pivots[r]);
      if (sgn(f) == 0) continue;
      for (std::size_t c = pivots[r]; c < cols; ++c)
        if (sgn(e.reduced(r, c)) != 0) e.reduced(above, c) -= f * e.reduced(r, c);
    }
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).rank(); }

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  Echelon e = echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(row[c]) != 0) v[c] -= f * row[c];
  }
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw DomainError("vector length differs from row space dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(v[c]) != 0) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw DomainError("vector length differs from row space dimension");
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   const std::vector<Rational>& target) {
  const std::size_t k = columns.size();
  const std::size_t dim = target.size();
  // Augmented system [columns | target] solved by elimination on its transpose.
  RationalMatrix a(dim, k + 1);
  for (std::size_t c = 0; c < k; ++c) {
    if (columns[c].size() != dim) throw DomainError("column length differs from target length");
    for (std::size_t r = 0; r < dim; ++r) a(r, c) = columns[c][r];
  }
  for (std::size_t r = 0; r < dim; ++r) a(r, k) = target[r];
  Echelon e = echelon(a);
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, k);
  }
  return x;
}

}  // namespace nlie
