#include <doctest.h>

#include "nlie/classifier.hpp"
#include "nlie/error.hpp"
#include "nlie/random.hpp"
#include "nlie/verma.hpp"

using namespace nlie;

namespace {
VectorField F(const char* s) { return parse_vector_field(s, 3); }
Monomial D(std::initializer_list<int> e) { return Monomial(3, e); }
}  // namespace

TEST_CASE("action on 1 (x) v") {
  WeightModule m = build_irrep(Weight{{1, 1}});
  VermaElement v = VermaElement::highest(m);
  CHECK(verma_act(F("1;;"), v) == VermaElement::basis(m, D({1, 0, 0}), 0));
  // x1 d_2 . (d_1 (x) v) = -d_2 (x) v + d_1 (x) E_12 v, and E_12 v = 0.
  VermaElement d1v = VermaElement::basis(m, D({1, 0, 0}), 0);
  VermaElement expected = VermaElement::basis(m, D({0, 1, 0}), 0) * Rational(-1);
  for (const auto& [k, c] : m.apply(1, 2, ModVector::unit(0)).coeffs) expected.add(D({1, 0, 0}), k, c);
  CHECK(verma_act(F(";x1;"), d1v) == expected);
  // Degree-one fields kill 1 (x) F.
  for (const auto& x : sn_graded_basis(3, 1)) CHECK(verma_act(x, v).is_zero());
  // Degree-zero fields act through gl_n: x_i d_j -> E_ij.
  VermaElement low = verma_act(F(";;x2"), v);
  VermaElement want(m);
  for (const auto& [k, c] : m.apply(2, 3, ModVector::unit(0)).coeffs) want.add(D({0, 0, 0}), k, c);
  CHECK(low == want);
  CHECK_THROWS_AS(verma_act(F("x1;;"), v), DomainError);
  CHECK(verma_act_word(UWord{VectorField(3), {}}, v).is_zero());
}

TEST_CASE("depth bound") {
  WeightModule m = build_irrep(Weight{{0, 0}});
  VermaElement v = VermaElement::basis(m, D({1, 1, 0}), 0, 2);
  CHECK_THROWS_AS(verma_act(F("1;;"), v), ResourceError);
}

TEST_CASE("representation property and grading") {
  RandomSource rng(17);
  for (const auto& lab : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    WeightModule m = build_irrep(Weight{lab});
    for (int t = 0; t < 10; ++t) {
      VectorField x = rng.sn_field(3, 3, 3), y = rng.sn_field(3, 3, 3);
      VermaElement v = VermaElement::basis(m, rng.monomial(3, 0, 2), std::size_t(rng.uniform(0, int(m.dim()) - 1)), 6);
      CHECK(verma_act(x, verma_act(y, v)) - verma_act(y, verma_act(x, v)) == verma_act(vf_bracket(x, y), v));
    }
    for (int j = -1; j <= 2; ++j)
      for (const auto& x : sn_graded_basis(3, j)) {
        VermaElement v = VermaElement::basis(m, D({1, 0, 1}), 0, 5);
        VermaElement image = verma_act(x, v);
        if (!image.is_zero()) CHECK(image.depth() == 2 - j);
      }
  }
}

TEST_CASE("singular vectors") {
  WeightModule trivial = build_irrep(Weight{{0, 0}});
  SingularVectors s0 = singular_vectors(trivial, 3);
  CHECK(s0.by_depth[0].size() == 1);
  CHECK(s0.by_depth[1].size() == 3);
  CHECK(s0.nontrivial_count() == 3);

  WeightModule adjoint = build_irrep(Weight{{1, 1}});
  SingularVectors s11 = singular_vectors(adjoint, 2);
  CHECK(s11.nontrivial_count() == 0);
  SingPlus p11(adjoint, 2, s11);
  for (int d = 0; d <= 2; ++d) CHECK(p11.dim(d) == 0);

  WeightModule wedge2 = build_irrep(Weight{{0, 1}});
  SingularVectors s01 = singular_vectors(wedge2, 3);
  SingularVectors s01_deg1 = singular_vectors(wedge2, 3, false);
  CHECK(s01.nontrivial_count() == 3);
  for (int d = 0; d <= 3; ++d) CHECK(s01.by_depth[d].size() == s01_deg1.by_depth[d].size());
  SingPlus p01(wedge2, 3, s01);
  CHECK(p01.dim(0) == 0);
  CHECK(p01.dim(1) == 3);
  CHECK(p01.dim(2) == 8);
  CHECK(p01.invariant_under(sn_graded_basis(3, 0)));
  CHECK_THROWS_AS(singular_vectors(wedge2, 7), ResourceError);
}

TEST_CASE("generators on 1 (x) v land at depth at most one") {
  WeightModule m = build_irrep(Weight{{1, 1}});
  VermaElement v = VermaElement::highest(m);
  for (const auto& s : sample_generators(3, CaseFilter::any_case, DegreeWindow::standard(3), 150, 5)) {
    VermaElement image = verma_act_word(generator_closed_form(s), v);
    CHECK(image.depth() <= 1);
    if (s.total_degree() == 7) CHECK(image.is_zero());
  }
}
