#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nlie/poly.hpp"
#include "nlie/vector_field.hpp"

namespace nlie {

/// Seeded generators for randomized property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Monomial monomial(std::size_t nvars, int min_degree, int max_degree);
  /// Up to max_terms terms of degree <= max_degree, small integer coefficients.
  Poly poly(std::size_t nvars, int max_degree, int max_terms);
  /// Random divergence-free field with graded pieces of degree -1..max_degree.
  VectorField sn_field(std::size_t nvars, int max_degree, int max_terms);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nlie
