#include "nlie/fixtures.hpp"

#include <functional>

#include "nlie/classifier.hpp"
#include "nlie/error.hpp"

namespace nlie {

// ------------------------------------------------------------ GlPoly

GlPoly GlPoly::scalar(const Rational& c) {
  GlPoly p;
  p.add({}, c);
  return p;
}

GlPoly GlPoly::e(std::size_t a, std::size_t b) {
  GlPoly p;
  p.add({{a, b}}, 1);
  return p;
}

void GlPoly::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GlPoly& GlPoly::operator+=(const GlPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

GlPoly& GlPoly::operator-=(const GlPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

GlPoly operator*(const GlPoly& a, const GlPoly& b) {
  GlPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      GlPoly::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

GlPoly operator*(const Rational& c, const GlPoly& a) { return GlPoly::scalar(c) * a; }

ModVector GlPoly::apply(const WeightModule& m, const ModVector& v) const {
  ModVector out;
  for (const auto& [w, c] : terms_) {
    ModVector x = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = m.apply(it->first, it->second, x);
    out += x * c;
  }
  return out;
}

std::string GlPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    Rational mag = abs(c);
    if (w.empty()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    for (const auto& [a, b] : w) s += "E" + std::to_string(a) + std::to_string(b);
  }
  return s;
}

VermaElement ExpectedImage::evaluate(const WeightModule& m, int depth_bound) const {
  VermaElement out(m, depth_bound);
  for (const auto& [pbw, poly] : parts)
    for (const auto& [k, c] : poly.apply(m, ModVector::unit(0)).coeffs) out.add(pbw, k, c);
  return out;
}

std::string ExpectedImage::to_string() const {
  std::string s;
  for (const auto& [pbw, poly] : parts) {
    if (!s.empty()) s += " + ";
    s += pbw_to_string(pbw) + " (x) (" + poly.to_string() + ") v";
  }
  return s.empty() ? "0" : s;
}

std::string Fixture::index_string() const {
  std::string s;
  for (const auto& [name, value] : indices) s += (s.empty() ? "" : ",") + name + "=" + std::to_string(value);
  return s;
}

// ------------------------------------------------------------ recipes

namespace {

using Idx = std::map<std::string, std::size_t>;

struct Recipe {
  std::string equation;
  std::size_t min_n;
  std::vector<std::string> params;
  std::pair<std::string, std::string> ordered;  // first < second in the stated form
  std::function<std::optional<GeneratorSpec>(std::size_t, const Idx&)> build;
  std::function<ExpectedImage(std::size_t, const Idx&)> rhs;
};

Monomial x(std::size_t n, std::size_t i) { return Monomial::variable(n, i); }

// x_1 .. x_n without the excluded variables, in order.
std::vector<Monomial> vars_except(std::size_t n, std::initializer_list<std::size_t> excluded) {
  std::vector<Monomial> out;
  for (std::size_t i = 1; i <= n; ++i)
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) out.push_back(x(n, i));
  return out;
}

bool replace(std::vector<Monomial>& list, std::size_t n, std::size_t var, const Monomial& by) {
  for (auto& m : list)
    if (m == x(n, var)) {
      m = by;
      return true;
    }
  return false;
}

std::optional<GeneratorSpec> assemble(std::size_t n, const std::vector<Monomial>& head, const Monomial& fn,
                                      const std::vector<Monomial>& tail) {
  if (head.size() != n - 1 || tail.size() != n - 2) return std::nullopt;
  GeneratorSpec s{n, head};
  s.f.push_back(fn);
  s.f.insert(s.f.end(), tail.begin(), tail.end());
  return s;
}

// Head: the variables other than x_a with x_b replaced by `by`; f_n; tail: the
// variables other than x_c, x_d with x_e replaced by `tail_by` (when e != 0).
std::optional<GeneratorSpec> shape(std::size_t n, std::size_t a, std::size_t b, const Monomial& by, const Monomial& fn,
                                   std::size_t c, std::size_t d, std::size_t e = 0,
                                   const Monomial& tail_by = Monomial()) {
  auto head = vars_except(n, {a});
  if (!replace(head, n, b, by)) return std::nullopt;
  auto tail = vars_except(n, {c, d});
  if (e != 0 && !replace(tail, n, e, tail_by)) return std::nullopt;
  return assemble(n, head, fn, tail);
}

Rational sign(long e) { return e % 2 ? Rational(-1) : Rational(1); }
long dl(std::size_t i, std::size_t j) { return delta_indicator(static_cast<int>(i), static_cast<int>(j)); }
GlPoly E(std::size_t a, std::size_t b) { return GlPoly::e(a, b); }
GlPoly one() { return GlPoly::scalar(1); }
GlPoly H(std::size_t a, std::size_t b) { return E(a, a) - E(b, b); }

ExpectedImage depth0(const GlPoly& p, std::size_t n) { return {{{Monomial(n), p}}}; }

std::vector<Recipe> recipes() {
  std::vector<Recipe> r;
  // Case 1(a)(i).
  r.push_back({"23", 3, {"l", "j", "k"}, {"j", "k"},
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 return shape(n, l, j, x(n, j) * x(n, l), x(n, j), j, k);
               },
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(j + l + k) + dl(k, l));
                 return ExpectedImage{{{x(n, l), s * E(l, k)}, {x(n, j), -s * E(j, k)}, {x(n, k), -s * H(l, j)}}};
               }});
  // Case 1(a)(ii).
  // The indices range over 1..n as in the other recipes; the stated range
  // 1..n-1 leaves no distinct choice at n = 4.
  r.push_back({"24", 4, {"q", "l", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), l = i.at("l"), j = i.at("j"), k = i.at("k");
                 return shape(n, l, k, x(n, k) * x(n, l), x(n, k), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), l = i.at("l"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(l + q + j) + dl(q, j));
                 return ExpectedImage{{{x(n, j), s * E(k, q)}, {x(n, q), -s * E(k, j)}}};
               }});
  // Case 2(i).
  r.push_back({"28", 4, {"l", "m", "j", "k"}, {"m", "j"},
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 return shape(n, j, l, x(n, l) * x(n, j), x(n, j), m, j, k, x(n, k) * x(n, m));
               },
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(m) + dl(m, j));
                 return depth0(s * (E(j, m) * E(m, j) - E(j, k) * E(k, j) + H(m, k) * (one() - H(j, l))), n);
               }});
  // Case 2(ii): 2(i) with m := l.
  r.push_back({"29", 3, {"j", "k", "l"}, {"l", "j"},
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 return shape(n, j, l, x(n, l) * x(n, j), x(n, j), l, j, k, x(n, k) * x(n, l));
               },
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(l) + dl(j, l));
                 return depth0(s * (E(j, k) * E(k, j) - H(l, k) * (one() - H(j, l))), n);
               }});
  // Case 2(iii): 2(i) with l := k.
  r.push_back({"30", 3, {"m", "j", "k"}, {"m", "j"},
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), j = i.at("j"), k = i.at("k");
                 return shape(n, j, k, x(n, k) * x(n, j), x(n, j), m, j, k, x(n, k) * x(n, m));
               },
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(m) + dl(m, j));
                 return depth0(s * (H(j, k) * (one() - H(m, k))), n);
               }});
  // Case 2(iv). The stated substitution is ambiguous; this reading keeps the
  // head of 2(i) renamed (x_j x_m, x_m omitted), takes f_n = x_j and omits
  // x_j, x_k from the tail with x_q -> x_q x_k. It is the shape whose image is
  // (E_mm - E_jj)(E_qq - E_kk) v up to sign.
  r.push_back({"31", 4, {"q", "m", "j", "k"}, {"j", "k"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 return shape(n, m, j, x(n, j) * x(n, m), x(n, j), j, k, q, x(n, q) * x(n, k));
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(q + m + j) + dl(j, q));
                 return depth0(s * (H(m, j) * H(q, k)), n);
               }});
  // Case 2(v).
  r.push_back({"32", 5, {"q", "m", "j", "k", "l"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, k, l, x(n, l) * x(n, k), x(n, k), q, j, m, x(n, m) * x(n, q));
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(j + q + k) + dl(q, k));
                 return depth0(s * (E(k, q) * E(q, j) - E(k, m) * E(m, j) - E(k, j) * H(q, m)), n);
               }});
  // Case 2(vi): 2(v) with m := l.
  r.push_back({"33", 4, {"q", "j", "k", "l"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, k, l, x(n, l) * x(n, k), x(n, k), q, j, l, x(n, l) * x(n, q));
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 Rational s = sign(long(j + l + k) + dl(l, k));
                 return depth0(s * (E(k, q) * E(q, j) - E(k, j) * H(q, l)), n);
               }});
  // Case 2(vii): 2(v) with l := j.
  r.push_back({"34", 4, {"q", "m", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 return shape(n, k, j, x(n, j) * x(n, k), x(n, k), q, j, m, x(n, m) * x(n, q));
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(j + m + k) + dl(m, j));
                 return depth0(s * (E(k, q) * E(q, j) - E(k, m) * E(m, j)), n);
               }});
  // Case 2(viii).
  r.push_back({"35", 5, {"m", "q", "j", "k", "l"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, m, l, x(n, l) * x(n, m), x(n, k) * x(n, q), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 Rational s = sign(long(m + j + q) + dl(q, j));
                 return depth0(s * (E(k, j) * H(m, l)), n);
               }});
  // Case 2(ix): 2(viii) with l := k.
  r.push_back({"36", 4, {"m", "q", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 return shape(n, m, k, x(n, k) * x(n, m), x(n, k) * x(n, q), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(m + j + k) + dl(k, j));
                 return depth0(s * (E(k, j) * (H(m, k) - one())), n);
               }});
  // Case 2(x).
  r.push_back({"37", 3, {"l", "j", "k"}, {"l", "j"},
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 return shape(n, l, j, x(n, l) * x(n, j), x(n, l), l, j, k, x(n, k) * x(n, k));
               },
               [](std::size_t n, const Idx& i) {
                 auto l = i.at("l"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(j) + dl(j, l));
                 return depth0(s * (E(k, j) * H(l, j)), n);
               }});
  // Case 2(xi).
  r.push_back({"38", 5, {"r", "q", "j", "k", "l"}, {"r", "q"},
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, l, j, x(n, j) * x(n, l), x(n, j), r_, q, k, x(n, k) * x(n, k));
               },
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 Rational s = 2 * sign(long(l + q) + dl(q, r_));
                 return depth0(s * (E(j, r_) * E(k, q) - E(j, q) * E(k, r_)), n);
               }});
  // Case 2(xii).
  r.push_back({"39", 4, {"r", "q", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 return shape(n, k, q, x(n, q) * x(n, q), x(n, k), q, j, r_, x(n, r_) * x(n, q));
               },
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(k + j + q) + dl(j, q));
                 return depth0(s * (E(q, r_) * E(r_, j) + E(q, j) * (H(q, r_) + one())), n);
               }});
  // Case 2(xiii).
  r.push_back({"40", 4, {"r", "q", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 return shape(n, k, j, x(n, j) * x(n, j), x(n, k), q, j, r_, x(n, r_) * x(n, q));
               },
               [](std::size_t n, const Idx& i) {
                 auto r_ = i.at("r"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(k + j + q) + dl(j, q));
                 return depth0(s * (E(q, j) * E(j, q) - E(r_, j) * E(j, r_) + H(q, r_)), n);
               }});
  // Case 2(xiv). The stated sign uses an index r that the recipe does not
  // define; delta_{j,q} is used in its place.
  r.push_back({"41", 5, {"m", "q", "j", "k", "l"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, m, l, x(n, l) * x(n, l), x(n, k) * x(n, q), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 Rational s = sign(long(l + q) + dl(j, q));
                 return depth0(s * (E(l, m) * E(k, j)), n);
               }});
  // Case 2(xv): 2(xiv) with l := k.
  r.push_back({"42", 4, {"m", "q", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 return shape(n, m, k, x(n, k) * x(n, k), x(n, k) * x(n, q), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto m = i.at("m"), q = i.at("q"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(q) + dl(q, k));
                 return depth0(s * (E(k, m) * E(k, j)), n);
               }});
  // Case 2(xvi): 2(xiv) with l := k, m := j.
  r.push_back({"43", 3, {"q", "j", "k"}, {"q", "j"},
               [](std::size_t n, const Idx& i) { return square_root_vector_spec(n, i.at("q"), i.at("j"), i.at("k")); },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), j = i.at("j"), k = i.at("k");
                 Rational s = sign(long(q) + dl(q, k));
                 return depth0(s * (E(k, j) * E(k, j)), n);
               }});
  // Case 2(xvii): 2(xiv) with m := k.
  r.push_back({"44", 4, {"q", "j", "k", "l"}, {"q", "j"},
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 return shape(n, k, l, x(n, l) * x(n, l), x(n, k) * x(n, q), q, j);
               },
               [](std::size_t n, const Idx& i) {
                 auto q = i.at("q"), j = i.at("j"), k = i.at("k"), l = i.at("l");
                 Rational s = sign(long(j + k + q) + dl(j, q));
                 return depth0(s * (E(l, j) - E(k, j) * E(l, k)), n);
               }});
  return r;
}

const std::vector<Recipe>& all_recipes() {
  static const std::vector<Recipe> r = recipes();
  return r;
}

const Recipe& find_recipe(const std::string& equation) {
  for (const auto& r : all_recipes())
    if (r.equation == equation) return r;
  throw DomainError("no recipe for equation " + equation);
}

}  // namespace

std::optional<GeneratorSpec> square_root_vector_spec(std::size_t n, std::size_t q, std::size_t j, std::size_t k) {
  return shape(n, j, k, x(n, k) * x(n, k), x(n, k) * x(n, q), q, j);
}

std::size_t fixture_min_n(const std::string& equation) { return find_recipe(equation).min_n; }

std::vector<std::string> fixture_equations() {
  std::vector<std::string> out;
  for (const auto& r : all_recipes()) out.push_back(r.equation);
  return out;
}

std::vector<Fixture> fixtures_for(const std::string& equation, std::size_t n) {
  const Recipe& rec = find_recipe(equation);
  std::vector<Fixture> out;
  if (n < rec.min_n) return out;
  const std::size_t top = n;
  const std::size_t p = rec.params.size();
  std::vector<std::size_t> v(p, 1);
  std::optional<Idx> first_ordered;
  auto make = [&](const Idx& idx, bool swapped) {
    auto spec = rec.build(n, idx);
    if (!spec) return false;
    Fixture f{rec.equation, n, {}, swapped, *spec, rec.rhs(n, idx)};
    for (const auto& name : rec.params) f.indices.emplace_back(name, idx.at(name));
    out.push_back(std::move(f));
    return true;
  };
  while (true) {
    bool distinct = true;
    for (std::size_t a = 0; a < p && distinct; ++a)
      for (std::size_t b = a + 1; b < p; ++b)
        if (v[a] == v[b]) distinct = false;
    if (distinct) {
      Idx idx;
      for (std::size_t a = 0; a < p; ++a) idx[rec.params[a]] = v[a];
      if (idx.at(rec.ordered.first) < idx.at(rec.ordered.second) && make(idx, false) && !first_ordered)
        first_ordered = idx;
    }
    std::size_t a = p;
    while (a > 0 && v[a - 1] == top) v[--a] = 1;
    if (a == 0) break;
    ++v[a - 1];
  }
  if (first_ordered) {
    Idx swapped = *first_ordered;
    std::swap(swapped[rec.ordered.first], swapped[rec.ordered.second]);
    make(swapped, true);
  }
  return out;
}

std::vector<Fixture> constraint_fixtures(std::size_t n) {
  if (n < 3) throw DomainError("fixtures need n >= 3");
  std::vector<Fixture> out;
  for (const auto& r : all_recipes()) {
    auto part = fixtures_for(r.equation, n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Weight> fixture_weights(std::size_t n) {
  if (n == 3) return weight_grid(3, 2);
  if (n == 4) return weight_grid(4, 1);
  std::vector<Weight> out{Weight{std::vector<int>(n - 1, 0)}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Weight w{std::vector<int>(n - 1, 0)};
    w.labels[i] = 1;
    out.push_back(w);
  }
  Weight w{std::vector<int>(n - 1, 0)};
  w.labels.front() = 1;
  w.labels.back() = 1;
  out.push_back(w);
  return out;
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures, const std::vector<Weight>& weights,
                                        std::size_t max_dim) {
  std::vector<FixtureResult> results;
  for (const auto& f : fixtures) results.push_back({f, 0, 0, 0, {}});
  for (const auto& w : weights) {
    WeightModule m = build_irrep(w, max_dim);
    VermaElement v = VermaElement::highest(m);
    for (auto& res : results) {
      if (res.fixture.n != w.n()) continue;
      VermaElement got = verma_act_word(generator_closed_form(res.fixture.spec), v);
      VermaElement want = res.fixture.expected.evaluate(m);
      ++res.weights_checked;
      if (got == want) {
        ++res.weights_matched;
      } else {
        if (!got.is_zero() && got == want * Rational(-1)) ++res.weights_sign_flipped;
        if (res.first_mismatch.empty())
          res.first_mismatch = "lambda=" + w.to_string() + ": got " + got.to_string() + ", expected " + want.to_string();
      }
    }
  }
  return results;
}

}  // namespace nlie
