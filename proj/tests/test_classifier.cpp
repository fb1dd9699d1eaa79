#include <doctest.h>

#include <set>

#include "nlie/classifier.hpp"
#include "nlie/fixtures.hpp"

using namespace nlie;

TEST_CASE("delta indicator") {
  CHECK(delta_indicator(3, 2) == 1);
  CHECK(delta_indicator(2, 3) == 0);
  CHECK(delta_indicator(2, 2) == 1);
}

TEST_CASE("weight grid") {
  auto g = weight_grid(3, 2);
  CHECK(g.size() == 9);
  CHECK(g.front().labels == std::vector<int>{0, 0});
  CHECK(g.back().labels == std::vector<int>{2, 2});
  CHECK(weight_grid(3, 0).size() == 1);
}

TEST_CASE("gl polynomials act right to left") {
  WeightModule m = build_irrep(Weight{{1, 0}});
  GlPoly p = GlPoly::e(2, 1) * GlPoly::e(1, 2);  // E_21 E_12 kills v
  CHECK(p.apply(m, ModVector::unit(0)).is_zero());
  GlPoly q = GlPoly::e(1, 2) * GlPoly::e(2, 1);
  CHECK(q.apply(m, ModVector::unit(0)) == ModVector::unit(0));
  CHECK((GlPoly::e(1, 1) - GlPoly::e(1, 1)).terms().empty());
  CHECK(GlPoly::scalar(2).to_string() == "2");
}

TEST_CASE("fixture instantiation") {
  CHECK(fixture_min_n("23") == 3);
  CHECK(fixture_min_n("32") == 5);
  CHECK(fixture_equations().size() == 19);
  CHECK(fixtures_for("32", 4).empty());
  auto f23 = fixtures_for("23", 3);
  REQUIRE(f23.size() == 4);
  CHECK(f23.front().spec.to_string() == "(x1*x2, x3, x2, x1)");
  CHECK(f23.back().swapped);
  for (const auto& f : constraint_fixtures(4)) {
    f.spec.validate();
    CHECK(f.n == 4);
  }
  CHECK(square_root_vector_spec(3, 1, 2, 3)->to_string() == "(x1, x3^2, x1*x3, x3)");
}

TEST_CASE("the stated image of the first bracket instance") {
  auto f = fixtures_for("23", 3).front();  // l=1, j=2, k=3
  auto results = run_fixtures({f}, weight_grid(3, 2));
  CHECK(results.front().weights_checked == 9);
  CHECK(results.front().matches());
}

TEST_CASE("the four-index generators give the quadratic constraints on the grid") {
  auto fx = fixtures_for("30", 3);
  std::set<std::vector<int>> zero_sets[4];
  for (const auto& w : weight_grid(3, 2)) {
    WeightModule m = build_irrep(w);
    VermaElement v = VermaElement::highest(m);
    for (std::size_t i = 0; i < fx.size(); ++i)
      if (verma_act_word(generator_closed_form(fx[i].spec), v).is_zero()) zero_sets[i].insert(w.labels);
  }
  std::set<std::vector<int>> c55, c56, c57;
  for (const auto& w : weight_grid(3, 2)) {
    int a = w.labels[0], b = w.labels[1];
    if ((a + b) * (1 - b) == 0) c55.insert(w.labels);
    if (a * (1 + b) == 0) c56.insert(w.labels);
    if (a * (1 + a + b) == 0) c57.insert(w.labels);
  }
  for (const auto& target : {c55, c56, c57}) {
    bool found = false;
    for (const auto& z : zero_sets) found = found || z == target;
    CHECK(found);
  }
}

TEST_CASE("q-triviality at n = 3") {
  ClassifyOptions o;
  o.filter = CaseFilter::case_1a;
  AdmissibilityReport zero = q_triviality(Weight{{0, 0}}, o);
  CHECK(zero.admissible);
  CHECK(zero.exceptional == std::optional<std::size_t>(0));
  CHECK(zero.generators_evaluated == 486);
  AdmissibilityReport one = q_triviality(Weight{{1, 0}}, o);
  CHECK_FALSE(one.admissible);
  CHECK_FALSE(one.violations.empty());
  CHECK(one.violations.size() <= o.max_witnesses);
  CHECK(one.violation_count >= one.violations.size());
  o.filter = CaseFilter::case_2;
  CHECK_FALSE(q_triviality(Weight{{2, 2}}, o).admissible);
}

TEST_CASE("square-root generator values at the last fundamental weight") {
  ClassifyOptions o;
  o.filter = CaseFilter::case_1a;
  AdmissibilityReport r = q_triviality(Weight{{0, 1}}, o);
  CHECK(r.square_root_evaluations.size() == fixtures_for("43", 3).size());
  for (const auto& e : r.square_root_evaluations) {
    // The recorded image is the pipeline value.
    WeightModule m = build_irrep(Weight{{0, 1}});
    VermaElement got = verma_act_word(generator_closed_form(e.spec), VermaElement::highest(m));
    CHECK(got.to_string() == e.image);
    CHECK(e.image_zero == got.is_zero());
  }
  CHECK_FALSE(r.discrepancy_notes.empty());
}
