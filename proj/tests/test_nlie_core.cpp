#include <doctest.h>

#include "nlie/nlie_core.hpp"
#include "nlie/random.hpp"

using namespace nlie;

namespace {
Poly P(const char* s, std::size_t n = 3) { return parse_poly(s, n); }
Wedge W(const char* s, std::size_t n = 3) { return parse_wedge(s, n); }

Wedge random_wedge(RandomSource& rng, std::size_t n, int degree) {
  std::vector<Poly> fs;
  for (std::size_t i = 0; i + 1 < n; ++i) fs.push_back(rng.poly(n, degree, 2));
  return Wedge::from_factors(fs);
}
}  // namespace

TEST_CASE("S^n bracket") {
  CHECK(nbracket(std::vector{P("x1"), P("x2"), P("x3")}) == P("1"));
  CHECK(nbracket(std::vector{P("x1*x2"), P("x2"), P("x3")}) == P("x2"));
  RandomSource rng(1);
  for (int t = 0; t < 20; ++t) {
    std::vector<Poly> fs{P("1"), rng.poly(3, 3, 3), rng.poly(3, 3, 3)};
    CHECK(nbracket(fs).is_zero());
    std::vector<Poly> gs{rng.poly(3, 3, 3), rng.poly(3, 3, 3), rng.poly(3, 3, 3)};
    Poly base = nbracket(gs);
    std::swap(gs[0], gs[2]);
    CHECK(nbracket(gs) == -base);
    std::swap(gs[1], gs[2]);
    CHECK(nbracket(gs) == base);
  }
}

TEST_CASE("Filippov-Jacobi for S^3") {
  CHECK(fj_residual(std::vector{P("x1"), P("x2")}, std::vector{P("x1^2"), P("x2"), P("x3")}).is_zero());
  RandomSource rng(2);
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> as{rng.poly(3, 3, 3), rng.poly(3, 3, 3)};
    std::vector<Poly> bs{rng.poly(3, 3, 3), rng.poly(3, 3, 3), rng.poly(3, 3, 3)};
    CHECK(fj_residual(as, bs).is_zero());
    bs[2] = bs[0];
    CHECK(fj_residual(as, bs).is_zero());
  }
}

TEST_CASE("vector product algebra") {
  std::vector<std::size_t> a{1, 2, 3}, b{2, 3, 4}, c{1, 1, 3}, d{3, 2, 1};
  CHECK(vector_product_bracket(a).sign == 1);
  CHECK(vector_product_bracket(a).index == 4);
  CHECK(vector_product_bracket(b).sign == -1);
  CHECK(vector_product_bracket(b).index == 1);
  CHECK(vector_product_bracket(c).sign == 0);
  CHECK(vector_product_bracket(d).sign == -1);
}

TEST_CASE("W^n bracket") {
  CHECK(wn_bracket(std::vector{P("1", 2), P("x1", 2), P("x2", 2)}) == P("1", 2));
  CHECK(wn_bracket(std::vector{P("x1", 2), P("x1", 2), P("x2", 2)}).is_zero());
}

TEST_CASE("wedges") {
  Wedge w = W("x2 ^ x1");
  CHECK(w == W("x1 ^ x2") * Rational(-1));
  CHECK(W("x1 ^ x1").is_zero());
  CHECK(W("x1^2 ^ x2").to_string() == W("x1^2 ^ x2").to_string());
}

TEST_CASE("ad") {
  CHECK(ad(W("x1 ^ x2")) == VectorField::partial(3, 3));
  CHECK(ker_ad_test(W("1 ^ x2")));
  CHECK_FALSE(ker_ad_test(W("x1 ^ x2")));
  CHECK(ker_ad_test(W("x1 + 1 ^ x1")));
  CHECK(ad_tilde(W("x1 ^ x2"), W("x3 ^ x1")) == W("1 ^ x1"));
  CHECK(ad_tilde(W("1 ^ x2"), W("x3 ^ x1^2")).is_zero());
}

TEST_CASE("ad reproduces the bracket and lands in S_n") {
  RandomSource rng(4);
  for (std::size_t n : {3u, 4u}) {
    for (int t = 0; t < 15; ++t) {
      std::vector<Poly> fs;
      for (std::size_t i = 0; i + 1 < n; ++i) fs.push_back(rng.poly(n, 3, 2));
      Poly b = rng.poly(n, 3, 3);
      std::vector<Poly> all = fs;
      all.push_back(b);
      VectorField x = ad(fs);
      CHECK(vf_apply(x, b) == nbracket(all));
      CHECK(divergence(x).is_zero());
      std::vector<Poly> with_one = fs;
      with_one[0] = Poly::constant(n, 1);
      CHECK(ad(with_one).is_zero());
    }
  }
}

TEST_CASE("ad is a Lie homomorphism; the wedge bracket is a Leibniz bracket") {
  RandomSource rng(6);
  for (int t = 0; t < 20; ++t) {
    Wedge a = random_wedge(rng, 3, 2), b = random_wedge(rng, 3, 2), c = random_wedge(rng, 3, 2);
    CHECK(ad(wedge_bracket(a, b)) == vf_bracket(ad(a), ad(b)));
    CHECK(wedge_bracket(a, a).is_zero());
    // Left Leibniz identity holds exactly.
    CHECK(wedge_bracket(a, wedge_bracket(b, c)) ==
          wedge_bracket(wedge_bracket(a, b), c) + wedge_bracket(b, wedge_bracket(a, c)));
    // Skew-symmetry holds modulo Ker(ad).
    CHECK(ker_ad_test(wedge_bracket(a, b) + wedge_bracket(b, a)));
  }
}

TEST_CASE("the wedge bracket is not skew on the nose") {
  Wedge a = W("x1 ^ x2"), b = W("x3 ^ x1*x2");
  Wedge s = wedge_bracket(a, b) + wedge_bracket(b, a);
  CHECK_FALSE(s.is_zero());
  CHECK(ker_ad_test(s));
}

TEST_CASE("Ker(ad) is an abelian ideal") {
  RandomSource rng(8);
  for (int t = 0; t < 20; ++t) {
    Poly f = rng.poly(3, 3, 3), g = rng.poly(3, 3, 3);
    Wedge k1 = Wedge::from_factors(std::vector{Poly::constant(3, 1), f});
    Wedge k2 = Wedge::from_factors(std::vector{g, g * Rational(2) + Poly::constant(3, 1)});
    CHECK(ker_ad_test(k1));
    CHECK(ker_ad_test(k2));
    CHECK(wedge_bracket(k1, k2).is_zero());
    Wedge x = random_wedge(rng, 3, 2);
    CHECK(ker_ad_test(wedge_bracket(k2, x)));
    CHECK(ker_ad_test(wedge_bracket(x, k2)));
  }
}

TEST_CASE("monomial kernel criteria") {
  auto m = [](std::initializer_list<int> e) { return Monomial(3, e); };
  std::vector<Monomial> constant{m({0, 0, 0}), m({1, 0, 0})};
  std::vector<Monomial> independent{m({1, 0, 0}), m({0, 1, 0})};
  std::vector<Monomial> powers{m({1, 0, 0}), m({2, 0, 0})};
  CHECK(kernel_criterion_rank(constant));
  CHECK(kernel_criterion_pairwise(constant));
  CHECK_FALSE(kernel_criterion_rank(independent));
  CHECK_FALSE(kernel_criterion_pairwise(independent));
  // x1 ^ x1^2 lies in the kernel although the gradients are not constant multiples.
  CHECK(kernel_criterion_rank(powers));
  CHECK_FALSE(kernel_criterion_pairwise(powers));
  CHECK(ker_ad_test(Wedge::from_factors(std::vector{Poly::from_monomial(powers[0]), Poly::from_monomial(powers[1])})));

  RandomSource rng(9);
  for (std::size_t n : {3u, 4u}) {
    for (int t = 0; t < 60; ++t) {
      std::vector<Monomial> ms;
      std::vector<Poly> ps;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        ms.push_back(rng.monomial(n, 0, 3));
        ps.push_back(Poly::from_monomial(ms.back()));
      }
      Wedge w = Wedge::from_factors(ps);
      if (w.is_zero()) continue;
      CHECK(kernel_criterion_rank(ms) == ker_ad_test(w));
    }
  }
}
