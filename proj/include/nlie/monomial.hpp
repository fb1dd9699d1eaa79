#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nlie {

/// Largest number of variables a Monomial can carry.
inline constexpr std::size_t kMaxVars = 8;

/// x_1^{e_1} ... x_n^{e_n} over a fixed ambient variable count n.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// of x_1, then x_2, ... (so x1 > x2 > ... > 1 among the linear monomials).
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<int> exponents);
  Monomial(std::size_t nvars, std::span<const int> exponents);

  /// x_i (1-based index i).
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  int operator[](std::size_t i) const { return exps_[i]; }  // 0-based
  void set(std::size_t i, int e);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  std::vector<int> exponents() const;

  Monomial operator*(const Monomial& other) const;
  /// Exponent-wise subtraction; nullopt when any exponent would go negative.
  std::optional<Monomial> divide(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

  /// "x1^2*x3", or "1" for the empty product.
  std::string to_string() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
};

/// All monomials of total degree d in n variables, in ascending graded-lex
/// order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace nlie

template <>
struct std::hash<nlie::Monomial> {
  std::size_t operator()(const nlie::Monomial& m) const noexcept { return m.hash(); }
};
