#include "nlie/report.hpp"

namespace nlie {

namespace {

std::string q(const Rational& r) { return r.get_str(); }

Json dynkin_key(const std::vector<int>& labels) { return Json(labels); }

}  // namespace

Json to_json(const Monomial& m) { return Json(m.exponents()); }

Json to_json(const GeneratorSpec& spec) {
  Json out = Json::array();
  for (const auto& f : spec.f) out.push_back(to_json(f));
  return out;
}

Json to_json(const UWord& w) {
  CanonicalUWord c = w.canonical();
  Json first = Json::array(), second = Json::array();
  for (const auto& [key, coeff] : c.first)
    first.push_back({{"monomial", to_json(key.first)}, {"index", key.second}, {"coeff", q(coeff)}});
  for (const auto& [key, coeff] : c.second) {
    const auto& [m1, i1, m2, i2] = key;
    second.push_back({{"left", {{"monomial", to_json(m1)}, {"index", i1}}},
                      {"right", {{"monomial", to_json(m2)}, {"index", i2}}},
                      {"coeff", q(coeff)}});
  }
  return {{"first_order", first}, {"second_order", second}};
}

Json to_json(const VermaElement& v) {
  Json terms = Json::array();
  const auto& basis = v.module().basis();
  for (const auto& [key, coeff] : v.terms())
    terms.push_back({{"pbw", to_json(key.first)}, {"flabel", basis.at(key.second).label}, {"coeff", q(coeff)}});
  return terms;
}

Json to_json(const Multiplicities& m) {
  Json out = Json::array();
  for (const auto& [mu, mult] : m) out.push_back({{"weight", dynkin_key(mu)}, {"multiplicity", mult}});
  return out;
}

Json to_json(const AdmissibilityReport& r) {
  Json violations = Json::array();
  for (const auto& w : r.violations)
    violations.push_back({{"spec", to_json(w.spec)}, {"spec_text", w.spec.to_string()}, {"image", w.image},
                          {"depth", w.depth}});
  Json evaluations = Json::array();
  for (const auto& e : r.square_root_evaluations)
    evaluations.push_back({{"spec", to_json(e.spec)},
                           {"spec_text", e.spec.to_string()},
                           {"indices", e.indices},
                           {"image", e.image},
                           {"image_zero", e.image_zero},
                           {"stated", e.stated},
                           {"stated_zero", e.stated_zero}});
  Json out = {{"n", r.n},
              {"lambda", r.lambda.labels},
              {"exceptional", r.exceptional ? Json(*r.exceptional) : Json(nullptr)},
              {"generators_evaluated", r.generators_evaluated},
              {"nonzero_images", r.nonzero_images},
              {"violation_count", r.violation_count},
              {"violations", violations},
              {"admissible", r.admissible},
              {"discrepancy_notes", r.discrepancy_notes}};
  if (!evaluations.empty()) out["square_root_evaluations"] = evaluations;
  return out;
}

Json to_json(const ClassificationSummary& s) {
  Json reports = Json::array(), admissible = Json::array(), discrepancies = Json::array();
  for (const auto& r : s.reports) {
    reports.push_back(to_json(r));
    if (r.admissible && !r.lambda.is_zero()) {
      Json d = {{"lambda", r.lambda.labels},
                {"kind", "admissible nonzero weight"},
                {"excluded_by", nullptr},
                {"square_root_evaluations", Json::array()}};
      for (const auto& e : r.square_root_evaluations)
        d["square_root_evaluations"].push_back(
            {{"spec", e.spec.to_string()}, {"indices", e.indices}, {"image", e.image}, {"stated", e.stated}});
      discrepancies.push_back(d);
    }
  }
  for (const auto& w : s.admissible) admissible.push_back(w.labels);
  return {{"n", s.n},
          {"reports", reports},
          {"admissible", admissible},
          {"matches_theorem", s.matches_theorem},
          {"discrepancy_notes", s.discrepancy_notes},
          {"discrepancies", discrepancies}};
}

Json to_json(const FixtureResult& r) {
  Json indices = Json::object();
  for (const auto& [name, value] : r.fixture.indices) indices[name] = value;
  return {{"equation", r.fixture.equation},
          {"n", r.fixture.n},
          {"indices", indices},
          {"swapped", r.fixture.swapped},
          {"spec", r.fixture.spec.to_string()},
          {"expected", r.fixture.expected.to_string()},
          {"weights_checked", r.weights_checked},
          {"weights_matched", r.weights_matched},
          {"weights_sign_flipped", r.weights_sign_flipped},
          {"matches", r.matches()},
          {"first_mismatch", r.first_mismatch}};
}

Json envelope(const std::string& command, const Json& inputs, const Json& result) {
  return {{"command", command}, {"inputs", inputs}, {"result", result}, {"version", kVersion}};
}

}  // namespace nlie
