#include <doctest.h>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/poly.hpp"
#include "nlie/random.hpp"

using namespace nlie;

namespace {
Poly P(const char* s, std::size_t n = 3) { return parse_poly(s, n); }
}  // namespace

TEST_CASE("parse and print") {
  Poly p = P("x1^2*x2 - 3/2*x3");
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Monomial(3, {0, 0, 1})) == Rational(-3, 2));
  CHECK(p.to_string() == "x1^2*x2 - 3/2*x3");
  CHECK(P("0").is_zero());
  CHECK(P("x1 + x1", 2) == P("2*x1", 2));
  CHECK(P("-x2 + 1/2").constant_term() == Rational(1, 2));
  CHECK_THROWS_AS(P("x4"), ParseError);
  CHECK_THROWS_AS(P("x1 +* x2"), ParseError);
  CHECK_THROWS_AS(P("3/0"), ParseError);
}

TEST_CASE("arithmetic") {
  CHECK(poly_arith(P("x1 + x2"), P("x1 - x2"), ArithOp::mul) == P("x1^2 - x2^2"));
  CHECK(poly_arith(P("x1"), P("x1"), ArithOp::sub).is_zero());
  Poly a = Poly::from_monomial(Monomial(3, {2, 0, 0})).with_truncation(4);
  Poly b = Poly::from_monomial(Monomial(3, {0, 3, 0})).with_truncation(4);
  CHECK((a * b).is_zero());
  CHECK_THROWS_AS(P("x1") + P("x1", 2), DomainError);
}

TEST_CASE("derivatives") {
  CHECK(partial_derivative(P("x1^2*x2"), 1) == P("2*x1*x2"));
  CHECK(partial_derivative(P("x1*x2"), 3).is_zero());
  CHECK(exact_divide(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
  CHECK_THROWS_AS(exact_divide(P("x1 + 1"), P("x2")), DomainError);
}

TEST_CASE("determinants") {
  PolyMatrix id{{P("1"), P("0")}, {P("0"), P("1")}};
  CHECK(poly_det(id) == P("1"));
  CHECK(poly_det({{P("x1"), P("x1")}, {P("x2"), P("x2")}}).is_zero());
  CHECK(poly_det({{P("x1"), P("x2")}, {P("1"), P("1")}}) == P("x1 - x2"));
}

TEST_CASE("ring axioms, Leibniz and alternation on random input") {
  RandomSource rng(11);
  for (int t = 0; t < 50; ++t) {
    Poly a = rng.poly(3, 3, 4), b = rng.poly(3, 3, 4), c = rng.poly(3, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * Poly(3)).is_zero());
    for (std::size_t i = 1; i <= 3; ++i)
      CHECK(partial_derivative(a * b, i) == partial_derivative(a, i) * b + a * partial_derivative(b, i));
  }
  for (int t = 0; t < 20; ++t) {
    PolyMatrix m(3, std::vector<Poly>(3));
    for (auto& row : m)
      for (auto& e : row) e = rng.poly(3, 2, 2);
    PolyMatrix s = m;
    for (auto& row : s) std::swap(row[0], row[2]);
    CHECK(poly_det(s) == -poly_det(m));
  }
}

TEST_CASE("Bareiss agrees with Laplace") {
  RandomSource rng(5);
  for (int t = 0; t < 5; ++t) {
    PolyMatrix m(5, std::vector<Poly>(5));
    for (auto& row : m)
      for (auto& e : row) e = rng.poly(2, 1, 2);
    // Expand along the first row by hand using 4x4 minors.
    Poly expected(2);
    for (std::size_t c = 0; c < 5; ++c) {
      PolyMatrix minor;
      for (std::size_t r = 1; r < 5; ++r) {
        std::vector<Poly> row;
        for (std::size_t k = 0; k < 5; ++k)
          if (k != c) row.push_back(m[r][k]);
        minor.push_back(row);
      }
      Poly term = m[0][c] * poly_det(minor);
      expected += c % 2 ? -term : term;
    }
    CHECK(poly_det(m) == expected);
  }
}

TEST_CASE("rational linear algebra") {
  RationalMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  RationalMatrix d(2, 2);
  d(0, 0) = Rational(1, 2), d(0, 1) = 3, d(1, 0) = 1, d(1, 1) = 4;
  CHECK(determinant(d) == -1);
  RowSpace rs(3);
  CHECK(rs.insert({1, 1, 0}));
  CHECK_FALSE(rs.insert({2, 2, 0}));
  CHECK(rs.contains({Rational(1, 3), Rational(1, 3), 0}));
  CHECK_FALSE(rs.contains({1, 0, 0}));
  auto sol = solve_in_span({{1, 0}, {1, 1}}, {3, 1});
  REQUIRE(sol);
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
}
