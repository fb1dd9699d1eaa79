#include "nlie/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <sstream>

#include "nlie/classifier.hpp"
#include "nlie/error.hpp"
#include "nlie/fixtures.hpp"
#include "nlie/nlie_core.hpp"
#include "nlie/qideal.hpp"
#include "nlie/random.hpp"
#include "nlie/report.hpp"
#include "nlie/sln.hpp"
#include "nlie/verma.hpp"

namespace nlie {

namespace {

struct Common {
  std::size_t n = 3;
  std::string emit = "text";
  bool json() const { return emit == "json"; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n", c.n, "number of variables")->check(CLI::Range(2, int(kMaxVars)));
  sub->add_option("--emit", c.emit, "output format")->check(CLI::IsMember({"text", "json"}));
}

void print(std::ostream& out, const Common& c, const std::string& command, const Json& inputs, const Json& result,
           const std::string& text) {
  if (c.json())
    out << envelope(command, inputs, result).dump(2) << "\n";
  else
    out << text;
}

std::vector<Weight> parse_weight_list(const std::string& text, std::size_t n) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_weight(item, n));
  if (out.empty()) throw ParseError("empty weight list");
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_bracket(const Common& c, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != c.n) throw DomainError("bracket expects " + std::to_string(c.n) + " polynomials");
  std::vector<Poly> fs;
  for (const auto& a : args) fs.push_back(parse_poly(a, c.n));
  Poly r = nbracket(fs);
  print(out, c, "bracket", {{"n", c.n}, {"polys", args}}, {{"value", r.to_string()}}, r.to_string() + "\n");
  return 0;
}

int cmd_fj(const Common& c, const std::string& algebra, std::size_t trials, std::uint64_t seed, int degree,
           std::ostream& out) {
  RandomSource rng(seed);
  const bool wn = algebra == "wn";
  const std::size_t vars = wn ? c.n - 1 : c.n;
  if (vars == 0) throw DomainError("W^n needs n >= 2");
  NaryBracket bracket = wn ? NaryBracket(wn_bracket) : NaryBracket(nbracket);
  std::size_t ok = 0;
  Json failures = Json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Poly> as, bs;
    for (std::size_t i = 0; i + 1 < c.n; ++i) as.push_back(rng.poly(vars, degree, 3));
    for (std::size_t i = 0; i < c.n; ++i) bs.push_back(rng.poly(vars, degree, 3));
    Poly res = fj_residual(bracket, as, bs);
    if (res.is_zero())
      ++ok;
    else if (failures.size() < 5)
      failures.push_back({{"trial", t}, {"residual", res.to_string()}});
  }
  std::string verdict = ok == trials ? "OK" : "FAIL";
  print(out, c, "fj",
        {{"n", c.n}, {"algebra", algebra}, {"trials", trials}, {"seed", seed}, {"degree", degree}},
        {{"verdict", verdict}, {"passed", ok}, {"trials", trials}, {"failures", failures}},
        verdict + " " + std::to_string(ok) + "/" + std::to_string(trials) + "\n");
  return ok == trials ? 0 : 1;
}

int cmd_ad(const Common& c, const std::string& wedge, std::ostream& out) {
  Wedge w = parse_wedge(wedge, c.n);
  VectorField x = ad(w);
  Poly div = divergence(x);
  bool kernel = x.is_zero();
  print(out, c, "ad", {{"n", c.n}, {"wedge", wedge}},
        {{"field", x.to_string()}, {"divergence", div.to_string()}, {"in_kernel", kernel}},
        x.to_string() + "\n");
  return 0;
}

int cmd_wedge_bracket(const Common& c, const std::string& a, const std::string& b, std::ostream& out) {
  Wedge r = wedge_bracket(parse_wedge(a, c.n), parse_wedge(b, c.n));
  print(out, c, "wedge-bracket", {{"n", c.n}, {"a", a}, {"b", b}}, {{"value", r.to_string()}}, r.to_string() + "\n");
  return 0;
}

int cmd_qgen(const Common& c, const std::string& case_name, std::size_t limit, std::size_t sample,
             std::uint64_t seed, bool count_only, std::ostream& out) {
  auto filter = parse_case_filter(case_name);
  if (!filter) throw ParseError("unknown case '" + case_name + "'");
  if (c.n < 3) throw DomainError("generators need n >= 3");
  DegreeWindow window = DegreeWindow::standard(c.n);
  Json inputs = {{"n", c.n}, {"case", case_name}, {"limit", limit}, {"sample", sample}, {"seed", seed}};
  std::size_t total = count_generators(c.n, *filter, window);
  std::vector<GeneratorSpec> specs;
  if (!count_only) {
    if (sample > 0) {
      specs = sample_generators(c.n, *filter, window, sample, seed);
    } else {
      for_each_generator(c.n, *filter, window, [&](const GeneratorSpec& s) {
        specs.push_back(s);
        return specs.size() < limit;
      });
    }
  }
  Json items = Json::array();
  std::ostringstream text;
  text << "count " << total << "\n";
  bool all_agree = true;
  for (const auto& s : specs) {
    UWord closed = generator_closed_form(s);
    bool agree = closed.canonical() == generator_direct(s).canonical();
    all_agree = all_agree && agree;
    Json j = to_json(closed);
    j["spec"] = to_json(s);
    j["spec_text"] = s.to_string();
    j["closed_form_equals_direct"] = agree;
    items.push_back(j);
    CanonicalUWord can = closed.canonical();
    text << s.to_string() << "  first-order terms " << can.first.size() << ", second-order terms "
         << can.second.size() << (agree ? "" : "  MISMATCH") << "\n";
  }
  print(out, c, "qgen", inputs, {{"count", total}, {"generators", items}}, text.str());
  return all_agree ? 0 : 1;
}

int cmd_freudenthal(const Common& c, const std::string& weight, std::ostream& out) {
  Weight w = parse_weight(weight, c.n);
  Multiplicities m = freudenthal_multiplicities(w);
  std::size_t total = 0;
  for (const auto& [mu, k] : m) total += k;
  Integer weyl = weyl_dimension(w);
  std::ostringstream text;
  for (const auto& [mu, k] : m) text << Weight{mu}.to_string() << " " << k << "\n";
  text << "dimension " << total << " (Weyl " << weyl.get_str() << ")\n";
  print(out, c, "freudenthal", {{"n", c.n}, {"weight", w.labels}},
        {{"multiplicities", to_json(m)}, {"dimension", total}, {"weyl_dimension", weyl.get_str()}}, text.str());
  return Integer(total) == weyl ? 0 : 1;
}

int cmd_irrep(const Common& c, const std::string& weight, std::size_t max_dim, std::ostream& out) {
  Weight w = parse_weight(weight, c.n);
  WeightModule m = build_irrep(w, max_dim);
  auto relations = check_gl_relations(m);
  Json basis = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    basis.push_back({{"label", m.basis()[i].label}, {"weight", m.dynkin(i)}});
  Json tables = Json::array();
  for (std::size_t a = 1; a <= c.n; ++a)
    for (std::size_t b = 1; b <= c.n; ++b) {
      if (a == b) continue;
      Json columns = Json::array();
      for (std::size_t k = 0; k < m.dim(); ++k) {
        Json col = Json::array();
        for (const auto& [idx, coeff] : m.apply(a, b, ModVector::unit(k)).coeffs)
          col.push_back({{"index", idx}, {"coeff", coeff.get_str()}});
        columns.push_back(col);
      }
      tables.push_back({{"operator", "E" + std::to_string(a) + std::to_string(b)}, {"columns", columns}});
    }
  std::ostringstream text;
  text << "dimension " << m.dim() << "\n";
  for (const auto& [mu, k] : m.weight_dimensions()) text << Weight{mu}.to_string() << " " << k << "\n";
  text << "gl relations " << (relations ? "FAIL: " + *relations : std::string("OK")) << "\n";
  print(out, c, "irrep", {{"n", c.n}, {"weight", w.labels}, {"max_dim", max_dim}},
        {{"dimension", m.dim()},
         {"basis", basis},
         {"multiplicities", to_json(m.weight_dimensions())},
         {"action_tables", tables},
         {"relations_ok", !relations}},
        text.str());
  return relations ? 1 : 0;
}

int cmd_singular(const Common& c, const std::string& weight, int depth, bool degree_one_only, std::size_t max_dim,
                 std::ostream& out) {
  Weight w = parse_weight(weight, c.n);
  WeightModule m = build_irrep(w, max_dim);
  SingularVectors sing = singular_vectors(m, depth, !degree_one_only);
  SingPlus plus(m, depth, sing);
  Json vectors = Json::array(), dims = Json::array();
  std::ostringstream text;
  for (int d = 0; d <= depth; ++d) {
    const auto& at = sing.by_depth[static_cast<std::size_t>(d)];
    text << "depth " << d << ": " << at.size() << " singular vector(s), Sing+ dimension " << plus.dim(d) << "\n";
    for (const auto& v : at) {
      vectors.push_back({{"depth", d}, {"terms", to_json(v)}});
      text << "  " << v.to_string() << "\n";
    }
    dims.push_back(plus.dim(d));
  }
  auto exc = exceptional_check(w);
  print(out, c, "singular",
        {{"n", c.n}, {"weight", w.labels}, {"depth", depth}, {"degree_one_only", degree_one_only}},
        {{"singular_vectors", vectors},
         {"nontrivial_count", sing.nontrivial_count()},
         {"sing_plus_dimensions", dims},
         {"exceptional", exc ? Json(*exc) : Json(nullptr)}},
        text.str());
  return 0;
}

int cmd_classify(const Common& c, const ClassifyOptions& options, int grid, const std::string& weights,
                 bool fundamental, std::ostream& out) {
  std::vector<Weight> list;
  if (!weights.empty()) {
    list = parse_weight_list(weights, c.n);
  } else if (fundamental) {
    list.push_back(Weight{std::vector<int>(c.n - 1, 0)});
    for (std::size_t i = 0; i + 1 < c.n; ++i) {
      Weight w{std::vector<int>(c.n - 1, 0)};
      w.labels[i] = 1;
      list.push_back(w);
    }
  } else {
    list = weight_grid(c.n, grid);
  }
  ClassificationSummary s = classify(c.n, list, options);
  Json inputs = {{"n", c.n},
                 {"depth", options.depth},
                 {"case", to_string(options.filter)},
                 {"max_dim", options.max_dim},
                 {"weights", Json::array()}};
  for (const auto& w : list) inputs["weights"].push_back(w.labels);
  std::ostringstream text;
  for (const auto& r : s.reports) {
    text << r.lambda.to_string() << (r.exceptional ? " exceptional" : "") << ": "
         << (r.admissible ? "admissible" : "excluded") << " (" << r.generators_evaluated << " generators, "
         << r.nonzero_images << " nonzero, " << r.violation_count << " violations)\n";
    if (!r.violations.empty())
      text << "  first violation " << r.violations.front().spec.to_string() << " -> " << r.violations.front().image
           << "\n";
  }
  text << "admissible:";
  for (const auto& w : s.admissible) text << " " << w.to_string();
  text << "\n";
  for (const auto& note : s.discrepancy_notes) text << "note: " << note << "\n";
  print(out, c, "classify", inputs, to_json(s), text.str());
  return s.matches_theorem || !s.discrepancy_notes.empty() ? 0 : 1;
}

int cmd_fixtures(const Common& c, const std::string& equation, std::size_t max_dim, std::ostream& out) {
  if (c.n < 3) throw DomainError("fixtures need n >= 3");
  std::vector<Fixture> fx = equation.empty() ? constraint_fixtures(c.n) : fixtures_for(equation, c.n);
  auto results = run_fixtures(fx, fixture_weights(c.n), max_dim);
  Json items = Json::array();
  std::size_t matched = 0;
  std::ostringstream text;
  for (const auto& r : results) {
    items.push_back(to_json(r));
    if (r.matches()) ++matched;
    text << r.fixture.equation << " [" << r.fixture.index_string() << (r.fixture.swapped ? ", swapped" : "")
         << "] " << r.weights_matched << "/" << r.weights_checked
         << (r.weights_sign_flipped ? " (sign flipped on " + std::to_string(r.weights_sign_flipped) + ")" : "")
         << "\n";
  }
  text << matched << "/" << results.size() << " fixtures match\n";
  Json weights = Json::array();
  for (const auto& w : fixture_weights(c.n)) weights.push_back(w.labels);
  print(out, c, "fixtures", {{"n", c.n}, {"equation", equation}, {"weights", weights}},
        {{"fixtures", items}, {"matched", matched}, {"total", results.size()}}, text.str());
  return matched == results.size() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the n-Lie algebra S^n and the Lie algebra S_n", "nlie"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common c;
  std::function<int()> action;

  std::vector<std::string> polys;
  auto* bracket = app.add_subcommand("bracket", "S^n bracket det(D_i f_j)");
  add_common(bracket, c);
  bracket->add_option("polys", polys, "n polynomials")->required();
  bracket->callback([&] { action = [&] { return cmd_bracket(c, polys, out); }; });

  std::string algebra = "sn";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int degree = 4;
  auto* fj = app.add_subcommand("fj", "seeded Filippov-Jacobi check");
  add_common(fj, c);
  fj->add_option("--trials", trials);
  fj->add_option("--seed", seed);
  fj->add_option("--degree", degree)->check(CLI::Range(0, 8));
  fj->add_option("--algebra", algebra)->check(CLI::IsMember({"sn", "wn"}));
  fj->callback([&] { action = [&] { return cmd_fj(c, algebra, trials, seed, degree, out); }; });

  std::string wedge;
  auto* adc = app.add_subcommand("ad", "inner derivation of a wedge");
  add_common(adc, c);
  adc->add_option("wedge", wedge, "f1 ^ f2 ^ ...")->required();
  adc->callback([&] { action = [&] { return cmd_ad(c, wedge, out); }; });

  std::string wa, wb;
  auto* wbr = app.add_subcommand("wedge-bracket", "Lie bracket on wedges");
  add_common(wbr, c);
  wbr->add_option("a", wa)->required();
  wbr->add_option("b", wb)->required();
  wbr->callback([&] { action = [&] { return cmd_wedge_bracket(c, wa, wb, out); }; });

  std::string case_name = "any";
  std::size_t limit = 20, sample = 0;
  bool count_only = false;
  auto* qgen = app.add_subcommand("qgen", "generators of the ideal Q");
  add_common(qgen, c);
  qgen->add_option("--case", case_name, "all, any, 1a, 1b, 2 or 3");
  qgen->add_option("--limit", limit, "number of specs listed");
  qgen->add_option("--sample", sample, "list a seeded sample instead");
  qgen->add_option("--seed", seed);
  qgen->add_flag("--count", count_only, "only count");
  qgen->callback([&] { action = [&] { return cmd_qgen(c, case_name, limit, sample, seed, count_only, out); }; });

  std::string weight;
  auto* fr = app.add_subcommand("freudenthal", "weight multiplicities");
  add_common(fr, c);
  fr->add_option("--weight", weight, "Dynkin labels, e.g. 1,0")->required();
  fr->callback([&] { action = [&] { return cmd_freudenthal(c, weight, out); }; });

  std::size_t max_dim = kDefaultMaxDim;
  auto* irrep = app.add_subcommand("irrep", "explicit irreducible sl_n module");
  add_common(irrep, c);
  irrep->add_option("--weight", weight)->required();
  irrep->add_option("--max-dim", max_dim);
  irrep->callback([&] { action = [&] { return cmd_irrep(c, weight, max_dim, out); }; });

  int depth = kDefaultDepth;
  bool degree_one_only = false;
  auto* sing = app.add_subcommand("singular", "singular vectors of the generalized Verma module");
  add_common(sing, c);
  sing->add_option("--weight", weight)->required();
  sing->add_option("--depth", depth)->check(CLI::Range(0, 6));
  sing->add_option("--max-dim", max_dim);
  sing->add_flag("--degree-one-only", degree_one_only, "use (S_n)_1 alone");
  sing->callback([&] { action = [&] { return cmd_singular(c, weight, depth, degree_one_only, max_dim, out); }; });

  int grid = 2;
  std::string weights;
  bool fundamental = false;
  std::size_t max_witnesses = 5;
  auto* cls = app.add_subcommand("classify", "Q-triviality over a weight grid");
  add_common(cls, c);
  cls->add_option("--grid", grid, "weights with 0 <= lambda_i <= grid")->check(CLI::Range(0, 4));
  cls->add_option("--weights", weights, "explicit list, e.g. \"0,0;1,0\"");
  cls->add_flag("--fundamental", fundamental, "zero and the fundamental weights");
  cls->add_option("--depth", depth)->check(CLI::Range(1, 6));
  cls->add_option("--case", case_name);
  cls->add_option("--max-dim", max_dim);
  cls->add_option("--max-witnesses", max_witnesses);
  cls->callback([&] {
    action = [&] {
      auto filter = parse_case_filter(case_name);
      if (!filter) throw ParseError("unknown case '" + case_name + "'");
      ClassifyOptions o;
      o.depth = depth;
      o.filter = *filter;
      o.max_dim = max_dim;
      o.max_witnesses = max_witnesses;
      return cmd_classify(c, o, grid, weights, fundamental, out);
    };
  });

  std::string equation;
  auto* fix = app.add_subcommand("fixtures", "instantiated constraint equations");
  add_common(fix, c);
  fix->add_option("--equation", equation, "restrict to one equation label");
  fix->add_option("--max-dim", max_dim);
  fix->callback([&] { action = [&] { return cmd_fixtures(c, equation, max_dim, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nlie
