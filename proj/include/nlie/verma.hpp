#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nlie/linalg.hpp"
#include "nlie/monomial.hpp"
#include "nlie/qideal.hpp"
#include "nlie/sln.hpp"
#include "nlie/vector_field.hpp"

namespace nlie {

inline constexpr int kDefaultDepth = 3;

/// Element of the generalized Verma module M(F) = U(S_n) (x) F, stored in the
/// PBW basis D^a (x) w with D^a a commutative monomial in d/dx_1..d/dx_n
/// (reusing Monomial for the exponents) and w a basis vector of F.
class VermaElement {
 public:
  using Key = std::pair<Monomial, std::size_t>;

  VermaElement(const WeightModule& module, int depth_bound = kDefaultDepth)
      : module_(&module), depth_bound_(depth_bound) {}

  /// 1 (x) v_lambda.
  static VermaElement highest(const WeightModule& module, int depth_bound = kDefaultDepth);
  /// D^a (x) w_index.
  static VermaElement basis(const WeightModule& module, const Monomial& pbw, std::size_t index,
                            int depth_bound = kDefaultDepth);

  const WeightModule& module() const { return *module_; }
  std::size_t nvars() const { return module_->n(); }
  int depth_bound() const { return depth_bound_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest PBW degree present, -1 for zero.
  int depth() const;
  VermaElement homogeneous_part(int depth) const;

  void add(const Monomial& pbw, std::size_t index, const Rational& c);
  VermaElement& operator+=(const VermaElement& rhs);
  VermaElement& operator-=(const VermaElement& rhs);
  VermaElement& operator*=(const Rational& c);
  friend VermaElement operator+(VermaElement a, const VermaElement& b) { return a += b; }
  friend VermaElement operator-(VermaElement a, const VermaElement& b) { return a -= b; }
  friend VermaElement operator*(VermaElement a, const Rational& c) { return a *= c; }
  bool operator==(const VermaElement& rhs) const { return terms_ == rhs.terms_; }

  /// e.g. "D1*D2 (x) F1v - 2 * 1 (x) v".
  std::string to_string() const;

 private:
  const WeightModule* module_;
  int depth_bound_;
  std::map<Key, Rational> terms_;
};

/// "D1^2*D3" or "1".
std::string pbw_to_string(const Monomial& a);

/// X . v for a divergence-free polynomial field X. Throws DomainError if X is
/// not in S_n and ResourceError if the result exceeds v's depth bound.
VermaElement verma_act(const VectorField& x, const VermaElement& v);

/// first_order . v + sum coeff * left . (right . v).
VermaElement verma_act_word(const UWord& w, const VermaElement& v);

/// Coordinates of the depth-k component over (PBW monomials of degree k) x (basis of F).
class DepthCoordinates {
 public:
  DepthCoordinates(const WeightModule& module, int depth);
  int depth() const { return depth_; }
  std::size_t size() const { return pbw_.size() * fdim_; }
  const std::vector<Monomial>& pbw() const { return pbw_; }
  std::vector<Rational> coordinates(const VermaElement& v) const;  // ignores other depths
  VermaElement element(const std::vector<Rational>& coords, int depth_bound) const;
  VermaElement basis_element(std::size_t index, int depth_bound) const;

 private:
  const WeightModule* module_;
  int depth_;
  std::size_t fdim_;
  std::vector<Monomial> pbw_;
  std::map<Monomial, std::size_t> pbw_index_;
};

/// Depth-graded singular vectors (annihilated by the chosen positive graded
/// pieces of S_n) up to a maximal depth.
struct SingularVectors {
  int max_depth = 0;
  bool include_degree_two = true;
  std::vector<std::vector<VermaElement>> by_depth;  // index = depth
  /// Nontrivial ones are those at depth >= 1.
  std::size_t nontrivial_count() const;
};

/// Solves X . v = 0 for X in a basis of (S_n)_1 (and (S_n)_2 when
/// include_degree_two), separately at each depth 0..max_depth.
SingularVectors singular_vectors(const WeightModule& module, int max_depth, bool include_degree_two = true);

/// The submodule U(S_-) applied to the nontrivial singular vectors, per depth.
class SingPlus {
 public:
  SingPlus(const WeightModule& module, int max_depth, const SingularVectors& sing);

  int max_depth() const { return max_depth_; }
  /// Dimension of the depth-k component.
  std::size_t dim(int depth) const { return spaces_.at(static_cast<std::size_t>(depth)).rank(); }
  std::vector<VermaElement> basis(int depth) const;
  /// Exact membership; throws ResourceError if v has components deeper than max_depth.
  bool contains(const VermaElement& v) const;
  /// Applies each field to every basis vector and tests membership. Returns
  /// false with the first offending field if some image leaves the subspace.
  bool invariant_under(const std::vector<VectorField>& fields, std::string* failure = nullptr) const;

 private:
  const WeightModule* module_;
  int max_depth_;
  std::vector<DepthCoordinates> coords_;
  std::vector<RowSpace> spaces_;
};

SingPlus sing_plus_submodule(const WeightModule& module, int max_depth);

}  // namespace nlie
