#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/monomial.hpp"
#include "nlie/rational.hpp"

namespace nlie {

/// Sparse multivariate polynomial with rational coefficients, optionally
/// truncated at a total degree (a truncated power series).
///
/// Terms are stored in ascending graded-lex order; zero coefficients and
/// monomials above the truncation bound are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars, std::optional<int> truncation = std::nullopt);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly from_monomial(const Monomial& m, const Rational& c = 1);
  /// x_i, 1-based.
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  std::optional<int> truncation() const { return truncation_; }
  Poly with_truncation(std::optional<int> bound) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Highest total degree present, -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Accumulates c*m, dropping the result if it cancels or exceeds the bound.
  void add_term(const Monomial& m, const Rational& c);

  /// Sum of the terms of total degree exactly d.
  Poly homogeneous_part(int d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }

  /// Value equality: same variable count and same terms.
  bool operator==(const Poly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

  /// Canonical text, highest graded-lex term first, e.g. "x1^2*x2 - 3/2*x3".
  std::string to_string() const;

 private:
  void check_compatible(const Poly& rhs) const;
  bool admits(const Monomial& m) const { return !truncation_ || m.degree() <= *truncation_; }

  Terms terms_;
  std::size_t nvars_ = 0;
  std::optional<int> truncation_;
};

/// Parses the polynomial text format: terms joined by '+'/'-', each term a
/// '*'-product of rationals and powers x<i>^<e>.
Poly parse_poly(std::string_view text, std::size_t nvars);

enum class ArithOp { add, sub, mul };
Poly poly_arith(const Poly& lhs, const Poly& rhs, ArithOp op);

/// Formal partial derivative with respect to x_i, 1-based.
Poly partial_derivative(const Poly& p, std::size_t i);

/// Exact quotient p / d. Throws DomainError if d does not divide p.
Poly exact_divide(const Poly& p, const Poly& d);

using PolyMatrix = std::vector<std::vector<Poly>>;  // row-major

/// Determinant: Laplace expansion up to 4x4, fraction-free Bareiss above
/// (Laplace is kept for truncated entries, where exact division is unavailable).
Poly poly_det(const PolyMatrix& m);

}  // namespace nlie
