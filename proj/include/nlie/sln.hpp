#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dominant integral weight of sl_n in the fundamental-weight basis:
/// labels[i] = lambda(E_{i+1,i+1} - E_{i+2,i+2}).
struct Weight {
  std::vector<int> labels;

  std::size_t n() const { return labels.size() + 1; }
  bool is_zero() const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
  std::string to_string() const;  // "(1,0)"
  /// gl_n highest weight p with p_n = 0: p_a = lambda_a + ... + lambda_{n-1}.
  std::vector<int> partition() const;
};

/// Parses "1,0,2"; n is the number of variables (so n-1 labels).
Weight parse_weight(std::string_view text, std::size_t n);

/// Type A_{n-1} root data with (alpha_i, alpha_i) = 1.
struct RootDatum {
  std::size_t n = 0;

  explicit RootDatum(std::size_t n);
  std::size_t rank() const { return n - 1; }
  /// (alpha_i, alpha_j), 0-based simple-root indices.
  Rational inner(std::size_t i, std::size_t j) const;
  /// a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  int cartan(std::size_t i, std::size_t j) const;
  /// Positive roots eps_a - eps_b (a < b) as simple-root coefficient vectors.
  std::vector<std::vector<int>> positive_roots() const;
  /// (x, y) for x, y given in simple-root coordinates.
  Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  /// Dynkin labels of lambda - sum k_j alpha_j.
  std::vector<int> lower(const std::vector<int>& lambda, const std::vector<int>& k) const;
};

/// Weight multiplicities keyed by Dynkin labels.
using Multiplicities = std::map<std::vector<int>, std::size_t>;

/// Freudenthal recursion over lambda - beta, beta >= 0, in order of height.
Multiplicities freudenthal_multiplicities(const Weight& lambda);

/// Product over positive roots of (lambda + delta, alpha) / (delta, alpha).
Integer weyl_dimension(const Weight& lambda);

/// True iff mu (Dynkin labels) is a weight of L(lambda): its dominant
/// conjugate lies below lambda.
bool is_weight_of(const Weight& lambda, const std::vector<int>& mu);

/// Image of mu under the simple reflection s_i (0-based).
std::vector<int> simple_reflection(const std::vector<int>& mu, std::size_t i);

/// Sparse vector over a module basis, keyed by basis index.
struct ModVector {
  std::map<std::size_t, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add(std::size_t index, const Rational& c);
  ModVector& operator+=(const ModVector& rhs);
  ModVector& operator-=(const ModVector& rhs);
  ModVector& operator*=(const Rational& c);
  friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
  friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }
  friend ModVector operator*(ModVector a, const Rational& c) { return a *= c; }
  bool operator==(const ModVector&) const = default;
  static ModVector unit(std::size_t index) { return {{{index, Rational(1)}}}; }
};

/// Explicit finite-dimensional irreducible sl_n-module, realized as a gl_n
/// module with highest weight partition(). Basis vector 0 is v_lambda.
class WeightModule {
 public:
  struct BasisVector {
    std::vector<int> depth;  // lambda - weight in simple-root coordinates
    std::string label;       // lowering word, e.g. "F2F1v"
  };

  std::size_t n() const { return n_; }
  const Weight& highest() const { return highest_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }

  /// Dynkin labels and gl_n (epsilon) weight of a basis vector.
  std::vector<int> dynkin(std::size_t index) const;
  std::vector<int> epsilon(std::size_t index) const;

  /// E_{a,b} applied to v, 1-based; a == b gives the diagonal gl_n action.
  ModVector apply(std::size_t a, std::size_t b, const ModVector& v) const;
  /// h_i = E_{i,i} - E_{i+1,i+1}, 1-based.
  ModVector apply_h(std::size_t i, const ModVector& v) const;

  /// Basis-vector count per weight, keyed by Dynkin labels.
  Multiplicities weight_dimensions() const;

  std::string to_string(const ModVector& v) const;

  friend WeightModule build_irrep(const Weight& lambda, std::size_t max_dim);

 private:
  std::size_t n_ = 0;
  Weight highest_;
  std::vector<int> partition_;
  std::vector<BasisVector> basis_;
  // table_[a][b][k] = E_{a+1,b+1} applied to basis vector k (a != b).
  std::vector<std::vector<std::vector<ModVector>>> table_;
};

inline constexpr std::size_t kDefaultMaxDim = 200;

/// Builds L(lambda) weight space by weight space: candidates F_j b are
/// identified through their images under all raising operators, which is
/// injective below the top weight of an irreducible module. Throws
/// ResourceError above max_dim.
WeightModule build_irrep(const Weight& lambda, std::size_t max_dim = kDefaultMaxDim);

/// E_{i,j} v, 1-based; checks index range.
ModVector act_e(std::size_t i, std::size_t j, const ModVector& v, const WeightModule& m);

/// Checks [E_ij, E_kl] = delta_jk E_il - delta_li E_kj on every basis vector.
/// Returns a description of the first failure, if any.
std::optional<std::string> check_gl_relations(const WeightModule& m);

/// p if lambda is zero (p = 0) or the p-th unit vector, otherwise nullopt.
std::optional<std::size_t> exceptional_check(const Weight& lambda);

}  // namespace nlie
