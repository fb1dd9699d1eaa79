#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nlie/monomial.hpp"
#include "nlie/vector_field.hpp"

namespace nlie {

/// Monomials f_1, ..., f_{2n-2} in n variables, none of them constant.
struct GeneratorSpec {
  std::size_t n = 0;
  std::vector<Monomial> f;

  /// Throws DomainError unless there are 2n-2 non-constant monomials in n variables.
  void validate() const;
  int total_degree() const;
  bool operator==(const GeneratorSpec&) const = default;
  std::string to_string() const;
};

/// coeff * (left o right) inside the enveloping algebra.
struct UWordPair {
  Rational coeff;
  VectorField left;
  VectorField right;
};

/// Canonical expansion of a UWord: first-order terms keyed by (monomial,
/// index) and second-order terms keyed by (m1, q, m2, s) for (m1 D_q)(m2 D_s).
struct CanonicalUWord {
  std::map<std::pair<Monomial, std::size_t>, Rational> first;
  std::map<std::tuple<Monomial, std::size_t, Monomial, std::size_t>, Rational> second;
  bool operator==(const CanonicalUWord&) const = default;
  bool is_zero() const { return first.empty() && second.empty(); }
};

/// first_order + sum coeff * left o right.
struct UWord {
  VectorField first_order;
  std::vector<UWordPair> second_order;

  CanonicalUWord canonical() const;
  bool is_zero() const { return canonical().is_zero(); }
};

/// Degree cases of the generator analysis. Each one is a condition on the
/// total degree T and on deg(f_i f_{n+1} ... f_{2n-2}) for some i <= n.
enum class CaseFilter {
  all,       // no condition beyond the degree window
  any_case,  // at least one of the four cases below
  case_1a,   // T = 2n-1, partial degree n-1
  case_1b,   // T = 2n-1, partial degree n
  case_2,    // T = 2n,   partial degree n
  case_3,    // T = 2n+1, partial degree n
};

std::optional<CaseFilter> parse_case_filter(std::string_view text);
std::string to_string(CaseFilter c);

/// Inclusive window of total degrees; the default is {2n-1, 2n, 2n+1}.
struct DegreeWindow {
  int lo = 0;
  int hi = -1;
  static DegreeWindow standard(std::size_t n) { return {int(2 * n - 1), int(2 * n + 1)}; }
};

bool matches_case(std::size_t n, const std::vector<int>& degrees, CaseFilter filter);

/// Visits the specs in deterministic order (total degree, then degree
/// composition, then graded-lex monomials per slot). The visitor returns false
/// to stop early.
void for_each_generator(std::size_t n, CaseFilter filter, DegreeWindow window,
                        const std::function<bool(const GeneratorSpec&)>& visit);

std::vector<GeneratorSpec> enumerate_generators(std::size_t n, CaseFilter filter = CaseFilter::any_case,
                                                std::optional<DegreeWindow> window = std::nullopt);

std::size_t count_generators(std::size_t n, CaseFilter filter, DegreeWindow window);

/// Uniform sample of k specs (reservoir sampling over the enumeration order),
/// returned in enumeration order.
std::vector<GeneratorSpec> sample_generators(std::size_t n, CaseFilter filter, DegreeWindow window, std::size_t k,
                                             std::uint64_t seed);

/// Generator built from the exponent-matrix formulas (determinants of integer
/// matrices times monomial quotients).
UWord generator_closed_form(const GeneratorSpec& spec);

/// Generator built directly as
///   ad([f_1..f_n] ^ f_{n+1} ^ ..) - sum_i (-1)^{i+n} ad(f_1 ^ .. ^ f_n without f_i) ad(f_i ^ f_{n+1} ^ ..).
UWord generator_direct(const GeneratorSpec& spec);

}  // namespace nlie
