#include "nlie/nlie_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

namespace {

int sign_of_sort(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

void check_nvars(std::span<const Poly> fs, std::size_t nvars) {
  for (const auto& f : fs)
    if (f.nvars() != nvars) throw DomainError("all arguments must live in " + std::to_string(nvars) + " variables");
}

// True iff p = c * q for a constant c (q != 0).
bool constant_multiple(const Poly& p, const Poly& q) {
  if (q.is_zero()) return p.is_zero();
  if (p.size() != q.size()) return false;
  Rational ratio;
  bool have = false;
  auto it = q.terms().begin();
  for (const auto& [m, c] : p.terms()) {
    if (it->first != m) return false;
    Rational r = c / it->second;
    if (have && r != ratio) return false;
    ratio = r;
    have = true;
    ++it;
  }
  return true;
}

}  // namespace

Poly nbracket(std::span<const Poly> fs) {
  const std::size_t n = fs.size();
  if (n == 0) throw DomainError("bracket needs arguments");
  const std::size_t nvars = fs[0].nvars();
  if (n != nvars)
    throw DomainError("S^n bracket takes exactly n = " + std::to_string(nvars) + " arguments, got " + std::to_string(n));
  check_nvars(fs, nvars);
  PolyMatrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = partial_derivative(fs[j], i + 1);
  return poly_det(m);
}

Poly wn_bracket(std::span<const Poly> fs) {
  const std::size_t n = fs.size();
  if (n < 2) throw DomainError("W^n bracket needs at least two arguments");
  const std::size_t nvars = fs[0].nvars();
  if (nvars != n - 1)
    throw DomainError("W^n bracket takes n arguments in n-1 variables (n = " + std::to_string(n) + ", variables = " +
                      std::to_string(nvars) + ")");
  check_nvars(fs, nvars);
  PolyMatrix m(n, std::vector<Poly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = fs[j];
    for (std::size_t i = 1; i < n; ++i) m[i][j] = partial_derivative(fs[j], i);
  }
  return poly_det(m);
}

Poly fj_residual(const NaryBracket& bracket, std::span<const Poly> as, std::span<const Poly> bs) {
  const std::size_t n = bs.size();
  if (n < 2 || as.size() + 1 != n)
    throw DomainError("Filippov-Jacobi residual needs n-1 and n arguments (got " + std::to_string(as.size()) + " and " +
                      std::to_string(n) + ")");
  std::vector<Poly> args(as.begin(), as.end());
  args.push_back(bracket(bs));
  Poly residual = bracket(args);
  std::vector<Poly> inner(as.begin(), as.end());
  inner.emplace_back();
  for (std::size_t i = 0; i < n; ++i) {
    inner.back() = bs[i];
    std::vector<Poly> outer(bs.begin(), bs.end());
    outer[i] = bracket(inner);
    if (outer[i].is_zero()) continue;
    residual -= bracket(outer);
  }
  return residual;
}

Poly fj_residual(std::span<const Poly> as, std::span<const Poly> bs) {
  return fj_residual([](std::span<const Poly> fs) { return nbracket(fs); }, as, bs);
}

SignedBasis vector_product_bracket(std::span<const std::size_t> indices) {
  const std::size_t n = indices.size();
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  for (auto i : sorted)
    if (i < 1 || i > n + 1) throw DomainError("basis index out of range 1.." + std::to_string(n + 1));
  int sign = sign_of_sort(sorted);
  for (std::size_t k = 1; k < n; ++k)
    if (sorted[k] == sorted[k - 1]) return {};
  // The omitted index is the first gap in 1..n+1.
  std::size_t omitted = n + 1;
  for (std::size_t k = 0; k < n; ++k)
    if (sorted[k] != k + 1) {
      omitted = k + 1;
      break;
    }
  if ((n + omitted - 1) % 2) sign = -sign;
  return {sign, omitted};
}

std::vector<Rational> vector_product(std::span<const std::vector<Rational>> vectors) {
  const std::size_t n = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != n + 1) throw DomainError("vector product needs n vectors of length n+1");
  std::vector<Rational> out(n + 1);
  std::vector<std::size_t> idx(n, 1);
  while (true) {
    Rational coeff = 1;
    for (std::size_t k = 0; k < n && sgn(coeff) != 0; ++k) coeff *= vectors[k][idx[k] - 1];
    if (sgn(coeff) != 0) {
      SignedBasis b = vector_product_bracket(idx);
      if (b.sign) out[b.index - 1] += b.sign > 0 ? coeff : Rational(-coeff);
    }
    std::size_t k = 0;
    while (k < n && idx[k] == n + 1) idx[k++] = 1;
    if (k == n) break;
    ++idx[k];
  }
  return out;
}

// ------------------------------------------------------------------ Wedge

void Wedge::add_term(Factors factors, Rational c) {
  if (factors.size() != arity_) throw DomainError("wedge term arity mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 1; i < factors.size(); ++i)
    for (std::size_t j = i; j > 0 && factors[j] <= factors[j - 1]; --j) {
      if (factors[j] == factors[j - 1]) return;
      std::swap(factors[j], factors[j - 1]);
      c = -c;
    }
  auto [it, inserted] = terms_.try_emplace(std::move(factors), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Wedge Wedge::from_factors(std::span<const Poly> factors) {
  if (factors.empty()) throw DomainError("wedge needs at least one factor");
  const std::size_t nvars = factors[0].nvars();
  check_nvars(factors, nvars);
  Wedge w(nvars, factors.size());
  std::vector<std::vector<std::pair<Monomial, Rational>>> lists;
  for (const auto& f : factors) {
    if (f.is_zero()) return w;
    lists.emplace_back(f.terms().begin(), f.terms().end());
  }
  std::vector<std::size_t> pos(factors.size(), 0);
  while (true) {
    Factors key;
    Rational c = 1;
    for (std::size_t k = 0; k < lists.size(); ++k) {
      key.push_back(lists[k][pos[k]].first);
      c *= lists[k][pos[k]].second;
    }
    w.add_term(std::move(key), c);
    std::size_t k = 0;
    while (k < lists.size() && pos[k] + 1 == lists[k].size()) pos[k++] = 0;
    if (k == lists.size()) break;
    ++pos[k];
  }
  return w;
}

void Wedge::check_compatible(const Wedge& rhs) const {
  if (nvars_ != rhs.nvars_ || arity_ != rhs.arity_) throw DomainError("wedge shapes differ");
}

Wedge Wedge::operator-() const {
  Wedge r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Wedge& Wedge::operator+=(const Wedge& rhs) {
  check_compatible(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

Wedge& Wedge::operator-=(const Wedge& rhs) {
  check_compatible(rhs);
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

Wedge& Wedge::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string Wedge::to_string() const {
  if (terms_.empty()) return "0";
  auto join = [](const Factors& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " ^ " : "") + f[i].to_string();
    return s;
  };
  if (terms_.size() == 1 && terms_.begin()->second == 1) return join(terms_.begin()->first);
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + join(k) + ")";
  }
  return out;
}

Wedge parse_wedge(std::string_view text, std::size_t nvars) {
  // A '^' with whitespace on either side separates factors; exponents are
  // written without surrounding spaces ("x1^2 ^ x2").
  std::vector<Poly> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool at_end = i == text.size();
    bool separator = !at_end && text[i] == '^' &&
                     ((i > 0 && std::isspace(static_cast<unsigned char>(text[i - 1]))) ||
                      (i + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[i + 1]))));
    if (at_end || separator) {
      factors.push_back(parse_poly(text.substr(start, i - start), nvars));
      start = i + 1;
    }
  }
  return Wedge::from_factors(factors);
}

// --------------------------------------------------------------------- ad

VectorField ad(std::span<const Poly> factors) {
  if (factors.empty()) throw DomainError("ad needs n-1 factors");
  const std::size_t n = factors[0].nvars();
  if (factors.size() + 1 != n)
    throw DomainError("ad takes n-1 = " + std::to_string(n - 1) + " factors, got " + std::to_string(factors.size()));
  check_nvars(factors, n);
  PolyMatrix jac(n, std::vector<Poly>(n - 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j + 1 < n; ++j) jac[r][j] = partial_derivative(factors[j], r + 1);
  std::vector<Poly> coeffs;
  for (std::size_t i = 1; i <= n; ++i) {
    PolyMatrix minor;
    for (std::size_t r = 0; r < n; ++r)
      if (r + 1 != i) minor.push_back(jac[r]);
    Poly d = n == 1 ? Poly::constant(n, 1) : poly_det(minor);
    coeffs.push_back((n + i) % 2 ? -d : d);
  }
  return VectorField(std::move(coeffs));
}

VectorField ad(const Wedge& w) {
  if (w.arity() + 1 != w.nvars())
    throw DomainError("ad takes wedges of n-1 = " + std::to_string(w.nvars() - 1) + " factors");
  VectorField out(w.nvars());
  std::vector<Poly> factors;
  for (const auto& [key, c] : w.terms()) {
    factors.clear();
    for (const auto& m : key) factors.push_back(Poly::from_monomial(m));
    out += ad(factors) * c;
  }
  return out;
}

Wedge ad_tilde(const Wedge& a, const Wedge& b) {
  if (a.nvars() != b.nvars()) throw DomainError("wedge variable counts differ");
  VectorField x = ad(a);
  Wedge out(b.nvars(), b.arity());
  if (x.is_zero()) return out;
  std::vector<Poly> factors;
  for (const auto& [key, c] : b.terms()) {
    factors.clear();
    for (const auto& m : key) factors.push_back(Poly::from_monomial(m));
    for (std::size_t slot = 0; slot < key.size(); ++slot) {
      Poly image = vf_apply(x, factors[slot]);
      if (image.is_zero()) continue;
      std::vector<Poly> replaced = factors;
      replaced[slot] = std::move(image);
      out += Wedge::from_factors(replaced) * c;
    }
  }
  return out;
}

Wedge wedge_bracket(const Wedge& a, const Wedge& b) {
  if (a.arity() + 1 != a.nvars() || b.arity() + 1 != b.nvars())
    throw DomainError("wedge bracket takes two wedges of n-1 factors");
  return ad_tilde(a, b);
}

bool ker_ad_test(const Wedge& w) { return ad(w).is_zero(); }

bool kernel_criterion_pairwise(std::span<const Monomial> factors) {
  for (const auto& m : factors)
    if (m.is_one()) return true;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const std::size_t nvars = factors[i].nvars();
      Poly fi = Poly::from_monomial(factors[i]);
      Poly fj = Poly::from_monomial(factors[j]);
      // grad f_i = c grad f_j: each component ratio must be the same constant.
      std::optional<Rational> ratio;
      bool proportional = true;
      for (std::size_t r = 1; r <= nvars && proportional; ++r) {
        Poly gi = partial_derivative(fi, r);
        Poly gj = partial_derivative(fj, r);
        if (gi.is_zero() && gj.is_zero()) continue;
        if (gi.is_zero() || gj.is_zero() || !constant_multiple(gi, gj)) {
          proportional = false;
          break;
        }
        Rational q = gi.terms().begin()->second / gj.terms().begin()->second;
        if (ratio && *ratio != q) proportional = false;
        ratio = q;
      }
      if (proportional) return true;
    }
  return false;
}

bool kernel_criterion_rank(std::span<const Monomial> factors) {
  if (factors.empty()) return false;
  const std::size_t nvars = factors[0].nvars();
  RationalMatrix e(nvars, factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    for (std::size_t r = 0; r < nvars; ++r) e(r, j) = factors[j][r];
  return rank(e) < factors.size();
}

}  // namespace nlie
