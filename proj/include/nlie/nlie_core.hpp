#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/poly.hpp"
#include "nlie/vector_field.hpp"

namespace nlie {

using NaryBracket = std::function<Poly(std::span<const Poly>)>;

/// The S^n bracket [f_1, ..., f_n] = det(D_i f_j) with n = number of variables.
Poly nbracket(std::span<const Poly> fs);

/// The W^n bracket on n polynomials in n-1 variables: the determinant whose
/// first row is (f_1, ..., f_n) followed by the rows D_i f_j.
Poly wn_bracket(std::span<const Poly> fs);

/// LHS - RHS of the Filippov-Jacobi identity
///   [a, [b_1..b_n]] = sum_i [b_1, .., [a, b_i], .., b_n]
/// for a = (a_1..a_{n-1}) under the given n-ary bracket.
Poly fj_residual(const NaryBracket& bracket, std::span<const Poly> as, std::span<const Poly> bs);
/// Filippov-Jacobi residual for the S^n bracket.
Poly fj_residual(std::span<const Poly> as, std::span<const Poly> bs);

/// Result of a vector-product bracket on basis vectors of F^{n+1}.
struct SignedBasis {
  int sign = 0;           // 0 encodes the zero vector
  std::size_t index = 0;  // 1-based basis index when sign != 0
};

/// [e_{i_1}, ..., e_{i_n}] in the (n+1)-dimensional vector-product algebra,
/// where [e_1, .., ^e_i, .., e_{n+1}] = (-1)^{n+i-1} e_i.
SignedBasis vector_product_bracket(std::span<const std::size_t> indices);

/// Multilinear extension of vector_product_bracket to n vectors of length n+1.
std::vector<Rational> vector_product(std::span<const std::vector<Rational>> vectors);

/// Element of the exterior power of the polynomial space, stored as a
/// combination of wedges of monomials. Each key is strictly ascending in
/// graded-lex order; zero coefficients are never stored.
class Wedge {
 public:
  using Factors = std::vector<Monomial>;

  Wedge() = default;
  Wedge(std::size_t nvars, std::size_t arity) : nvars_(nvars), arity_(arity) {}

  /// Multilinear expansion of f_1 ^ ... ^ f_m.
  static Wedge from_factors(std::span<const Poly> factors);

  std::size_t nvars() const { return nvars_; }
  std::size_t arity() const { return arity_; }
  const std::map<Factors, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c * (m_1 ^ ... ^ m_k) after sorting the factors with sign.
  void add_term(Factors factors, Rational c);

  Wedge operator-() const;
  Wedge& operator+=(const Wedge& rhs);
  Wedge& operator-=(const Wedge& rhs);
  Wedge& operator*=(const Rational& c);
  friend Wedge operator+(Wedge a, const Wedge& b) { return a += b; }
  friend Wedge operator-(Wedge a, const Wedge& b) { return a -= b; }
  friend Wedge operator*(Wedge a, const Rational& c) { return a *= c; }

  bool operator==(const Wedge& rhs) const = default;

  /// "x1 ^ x2" for a single unit term, otherwise "c*(m1 ^ m2) + ...".
  std::string to_string() const;

 private:
  void check_compatible(const Wedge& rhs) const;

  std::size_t nvars_ = 0;
  std::size_t arity_ = 0;
  std::map<Factors, Rational> terms_;
};

/// Parses "f1 ^ f2 ^ ... ^ fk" with polynomial factors.
Wedge parse_wedge(std::string_view text, std::size_t nvars);

/// ad(f_1 ^ .. ^ f_{n-1}) as the vector field
///   sum_i (-1)^{n+i} det(Jacobian with row i removed) d/dx_i,
/// so that ad(f)(b) = [f_1, .., f_{n-1}, b].
VectorField ad(std::span<const Poly> factors);
VectorField ad(const Wedge& w);

/// Slot-wise action of ad(a) on an arbitrary wedge b.
Wedge ad_tilde(const Wedge& a, const Wedge& b);

/// Lie bracket on the (n-1)-st exterior power: [a, b] = ad_tilde(a)(b).
Wedge wedge_bracket(const Wedge& a, const Wedge& b);

/// True iff ad(w) is the zero vector field.
bool ker_ad_test(const Wedge& w);

/// Kernel criterion for a single wedge of monomials as stated for S^n: some
/// factor is constant, or two factors have gradients that are constant
/// multiples of each other.
bool kernel_criterion_pairwise(std::span<const Monomial> factors);

/// Exact kernel criterion for a single wedge of monomials: the exponent
/// vectors of the factors are linearly dependent (the Jacobian of a monomial
/// wedge is diag(1/x) * exponents * diag(factors)).
bool kernel_criterion_rank(std::span<const Monomial> factors);

}  // namespace nlie
