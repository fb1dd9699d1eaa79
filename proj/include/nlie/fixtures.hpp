#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlie/qideal.hpp"
#include "nlie/sln.hpp"
#include "nlie/verma.hpp"

namespace nlie {

/// Non-commutative polynomial in the gl_n matrix units. A word is written
/// left to right and acts right to left; the empty word is the identity.
class GlPoly {
 public:
  using Word = std::vector<std::pair<std::size_t, std::size_t>>;

  static GlPoly scalar(const Rational& c);
  static GlPoly e(std::size_t a, std::size_t b);

  const std::map<Word, Rational>& terms() const { return terms_; }
  GlPoly& operator+=(const GlPoly& rhs);
  GlPoly& operator-=(const GlPoly& rhs);
  friend GlPoly operator+(GlPoly a, const GlPoly& b) { return a += b; }
  friend GlPoly operator-(GlPoly a, const GlPoly& b) { return a -= b; }
  friend GlPoly operator*(const GlPoly& a, const GlPoly& b);
  friend GlPoly operator*(const Rational& c, const GlPoly& a);

  ModVector apply(const WeightModule& m, const ModVector& v) const;
  std::string to_string() const;

 private:
  void add(const Word& w, const Rational& c);
  std::map<Word, Rational> terms_;
};

/// sum over parts of D^a (x) (poly . v_lambda).
struct ExpectedImage {
  std::vector<std::pair<Monomial, GlPoly>> parts;

  VermaElement evaluate(const WeightModule& m, int depth_bound = kDefaultDepth) const;
  std::string to_string() const;
};

/// One instantiated equation: a generator built from the monomial recipe and
/// the claimed image of 1 (x) v_lambda.
struct Fixture {
  std::string equation;  // e.g. "23"
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::size_t>> indices;
  bool swapped = false;  // the ordered index pair was interchanged
  GeneratorSpec spec;
  ExpectedImage expected;

  std::string index_string() const;
};

/// Smallest n for which the equation's recipe is stated.
std::size_t fixture_min_n(const std::string& equation);

/// Equations with a monomial recipe, in order.
std::vector<std::string> fixture_equations();

/// Every instance of the recipes stated for this n (index tuples obeying the
/// stated ordering, plus one interchanged tuple per ordered recipe).
std::vector<Fixture> constraint_fixtures(std::size_t n);

/// Instances of one equation at one n.
std::vector<Fixture> fixtures_for(const std::string& equation, std::size_t n);

struct FixtureResult {
  Fixture fixture;
  std::size_t weights_checked = 0;
  std::size_t weights_matched = 0;
  /// Weights on which the image equals minus the expected value (and is nonzero).
  std::size_t weights_sign_flipped = 0;
  bool matches() const { return weights_checked > 0 && weights_matched == weights_checked; }
  std::string first_mismatch;
};

/// Evaluates each fixture on every weight: verma_act_word(closed form) on
/// 1 (x) v_lambda against the expected image.
std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures, const std::vector<Weight>& weights,
                                        std::size_t max_dim = kDefaultMaxDim);

/// Default weights for fixture checks at n: the grid lambda_i <= 2 for n = 3,
/// lambda_i <= 1 for n = 4, and zero, the fundamental weights and e_1 + e_{n-1} above.
std::vector<Weight> fixture_weights(std::size_t n);

/// Generator of the E_{k,j}E_{k,j} recipe with free index q.
std::optional<GeneratorSpec> square_root_vector_spec(std::size_t n, std::size_t q, std::size_t j, std::size_t k);

}  // namespace nlie
