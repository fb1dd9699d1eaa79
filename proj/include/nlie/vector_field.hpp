#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/poly.hpp"

namespace nlie {

/// First-order differential operator sum_i f_i d/dx_i with polynomial
/// coefficients: an element of W_n.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::size_t nvars);
  explicit VectorField(std::vector<Poly> coeffs);

  /// d/dx_i, 1-based.
  static VectorField partial(std::size_t nvars, std::size_t i);
  /// c * m * d/dx_i, 1-based.
  static VectorField term(const Monomial& m, std::size_t i, const Rational& c = 1);

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  /// Coefficient of d/dx_i, 1-based.
  const Poly& coeff(std::size_t i) const { return coeffs_.at(i - 1); }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& rhs);
  VectorField& operator-=(const VectorField& rhs);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  /// Multiplies every coefficient by the polynomial p.
  friend VectorField operator*(const Poly& p, const VectorField& v);

  bool operator==(const VectorField& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// "f1;f2;...;fn".
  std::string to_string() const;

 private:
  std::vector<Poly> coeffs_;
};

/// Parses "f1;f2;...;fn"; an empty slot is the zero polynomial.
VectorField parse_vector_field(std::string_view text, std::size_t nvars);

/// X(p) = sum_i f_i dp/dx_i.
Poly vf_apply(const VectorField& x, const Poly& p);

/// Commutator [X, Y] = X o Y - Y o X.
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// div X = sum_i df_i/dx_i.
Poly divergence(const VectorField& x);

/// True iff divergence(x) vanishes, i.e. x lies in S_n.
bool sn_membership(const VectorField& x);

/// Coefficient-wise derivative d/dx_i applied to X; [X, d_i] = -differentiate(X, i).
VectorField differentiate(const VectorField& x, std::size_t i);

/// Graded pieces keyed by degree j: the part whose coefficients are
/// homogeneous of degree j+1. Only non-zero parts are stored.
using GradedField = std::map<int, VectorField>;

GradedField grade_decompose(const VectorField& x);
VectorField reassemble(const GradedField& g, std::size_t nvars);

/// Basis of the homogeneous component (S_n)_j, j >= -1, as the kernel of the
/// divergence on (W_n)_j.
std::vector<VectorField> sn_graded_basis(std::size_t nvars, int j);

}  // namespace nlie
