#include "nlie/classifier.hpp"

#include <memory>

#include "nlie/error.hpp"
#include "nlie/fixtures.hpp"

namespace nlie {

int delta_indicator(int i, int j) { return i >= j ? 1 : 0; }

std::vector<Weight> weight_grid(std::size_t n, int grid_bound) {
  if (n < 2) throw DomainError("weight grid needs n >= 2");
  if (grid_bound < 0) throw DomainError("grid bound must be non-negative");
  std::vector<Weight> out;
  std::vector<int> v(n - 1, 0);
  while (true) {
    out.push_back(Weight{v});
    std::size_t a = v.size();
    while (a > 0 && v[a - 1] == grid_bound) v[--a] = 0;
    if (a == 0) break;
    ++v[a - 1];
  }
  return out;
}

namespace {

bool is_last_fundamental(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.labels.size(); ++i)
    if (w.labels[i] != 0) return false;
  return !w.labels.empty() && w.labels.back() == 1;
}

std::vector<SquareRootEvaluation> square_root_evaluations(const WeightModule& m, const VermaElement& v) {
  std::vector<SquareRootEvaluation> out;
  for (const auto& f : fixtures_for("43", m.n())) {
    VermaElement got = verma_act_word(generator_closed_form(f.spec), v);
    VermaElement stated = f.expected.evaluate(m);
    out.push_back({f.spec, f.index_string(), got.to_string(), f.expected.to_string() + " = " + stated.to_string(),
                   got.is_zero(), stated.is_zero()});
  }
  return out;
}

struct WeightState {
  WeightState(const Weight& w, const ClassifyOptions& options)
      : lambda(w), module(build_irrep(w, options.max_dim)), highest(VermaElement::highest(module, options.depth)) {}
  Weight lambda;
  WeightModule module;
  VermaElement highest;
  std::unique_ptr<SingPlus> sing_plus;
  AdmissibilityReport report;
};

}  // namespace

std::vector<AdmissibilityReport> classify_weights(const std::vector<Weight>& weights, const ClassifyOptions& options) {
  if (weights.empty()) return {};
  const std::size_t n = weights.front().n();
  for (const auto& w : weights)
    if (w.n() != n) throw DomainError("weights of different rank in one classification");

  std::vector<std::unique_ptr<WeightState>> states;
  for (const auto& w : weights) {
    auto s = std::make_unique<WeightState>(w, options);
    s->report.n = n;
    s->report.lambda = w;
    s->report.exceptional = exceptional_check(w);
    if (s->report.exceptional) s->sing_plus = std::make_unique<SingPlus>(sing_plus_submodule(s->module, options.depth));
    states.push_back(std::move(s));
  }

  DegreeWindow window = options.window.value_or(DegreeWindow::standard(n));
  for_each_generator(n, options.filter, window, [&](const GeneratorSpec& spec) {
    UWord word = generator_closed_form(spec);
    for (auto& s : states) {
      AdmissibilityReport& r = s->report;
      ++r.generators_evaluated;
      VermaElement image = verma_act_word(word, s->highest);
      if (image.is_zero()) continue;
      ++r.nonzero_images;
      if (s->sing_plus && s->sing_plus->contains(image)) continue;
      ++r.violation_count;
      if (r.violations.size() < options.max_witnesses) r.violations.push_back({spec, image.to_string(), image.depth()});
    }
    return true;
  });

  std::vector<AdmissibilityReport> out;
  for (auto& s : states) {
    AdmissibilityReport& r = s->report;
    r.admissible = r.violation_count == 0;
    if (is_last_fundamental(s->lambda) && n >= 3) {
      r.square_root_evaluations = square_root_evaluations(s->module, s->highest);
      for (const auto& e : r.square_root_evaluations)
        r.discrepancy_notes.push_back("E_kj E_kj generator " + e.spec.to_string() + " [" + e.indices +
                                      "]: image " + e.image + "; stated " + e.stated);
      if (r.violations.empty())
        r.discrepancy_notes.push_back("no enumerated generator excludes " + s->lambda.to_string());
      else
        r.discrepancy_notes.push_back("excluded by " + r.violations.front().spec.to_string());
    }
    out.push_back(std::move(r));
  }
  return out;
}

AdmissibilityReport q_triviality(const Weight& lambda, const ClassifyOptions& options) {
  return classify_weights({lambda}, options).front();
}

ClassificationSummary classify(std::size_t n, const std::vector<Weight>& weights, const ClassifyOptions& options) {
  ClassificationSummary s;
  s.n = n;
  s.reports = classify_weights(weights, options);
  for (const auto& r : s.reports)
    if (r.admissible) s.admissible.push_back(r.lambda);
  s.matches_theorem = s.admissible.size() == 1 && s.admissible.front().is_zero();
  if (!s.matches_theorem) {
    std::string list;
    for (const auto& w : s.admissible) list += (list.empty() ? "" : ", ") + w.to_string();
    s.discrepancy_notes.push_back("admissible set differs from {0}: {" + list + "}");
    for (const auto& r : s.reports)
      if (r.admissible && !r.lambda.is_zero())
        for (const auto& note : r.discrepancy_notes) s.discrepancy_notes.push_back(r.lambda.to_string() + ": " + note);
  }
  return s;
}

}  // namespace nlie
