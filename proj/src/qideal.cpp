#include "nlie/qideal.hpp"

#include <random>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"
#include "nlie/nlie_core.hpp"

namespace nlie {

void GeneratorSpec::validate() const {
  if (n < 3) throw DomainError("generators need n >= 3");
  if (f.size() != 2 * n - 2) throw DomainError("generator needs 2n-2 = " + std::to_string(2 * n - 2) + " monomials");
  for (const auto& m : f) {
    if (m.nvars() != n) throw DomainError("generator monomials must live in n variables");
    if (m.is_one()) throw DomainError("generator monomials must be non-constant");
  }
}

int GeneratorSpec::total_degree() const {
  int d = 0;
  for (const auto& m : f) d += m.degree();
  return d;
}

std::string GeneratorSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].to_string();
  return s + ")";
}

CanonicalUWord UWord::canonical() const {
  CanonicalUWord out;
  auto accumulate = [](auto& map, const auto& key, const Rational& c) {
    auto [it, inserted] = map.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) map.erase(it);
    }
  };
  for (std::size_t i = 1; i <= first_order.nvars(); ++i)
    for (const auto& [m, c] : first_order.coeff(i).terms()) accumulate(out.first, std::make_pair(m, i), c);
  for (const auto& pair : second_order) {
    if (sgn(pair.coeff) == 0) continue;
    for (std::size_t q = 1; q <= pair.left.nvars(); ++q)
      for (const auto& [m1, c1] : pair.left.coeff(q).terms())
        for (std::size_t s = 1; s <= pair.right.nvars(); ++s)
          for (const auto& [m2, c2] : pair.right.coeff(s).terms())
            accumulate(out.second, std::make_tuple(m1, q, m2, s), pair.coeff * c1 * c2);
  }
  return out;
}

std::optional<CaseFilter> parse_case_filter(std::string_view text) {
  if (text == "all") return CaseFilter::all;
  if (text == "any") return CaseFilter::any_case;
  if (text == "1a") return CaseFilter::case_1a;
  if (text == "1b") return CaseFilter::case_1b;
  if (text == "2") return CaseFilter::case_2;
  if (text == "3") return CaseFilter::case_3;
  return std::nullopt;
}

std::string to_string(CaseFilter c) {
  switch (c) {
    case CaseFilter::all: return "all";
    case CaseFilter::any_case: return "any";
    case CaseFilter::case_1a: return "1a";
    case CaseFilter::case_1b: return "1b";
    case CaseFilter::case_2: return "2";
    case CaseFilter::case_3: return "3";
  }
  return "?";
}

bool matches_case(std::size_t n, const std::vector<int>& degrees, CaseFilter filter) {
  if (filter == CaseFilter::all) return true;
  const int ni = static_cast<int>(n);
  int total = 0;
  for (int d : degrees) total += d;
  int tail = 0;
  for (std::size_t l = n; l < degrees.size(); ++l) tail += degrees[l];
  auto exists_partial = [&](int target) {
    for (std::size_t i = 0; i < n; ++i)
      if (degrees[i] + tail == target) return true;
    return false;
  };
  bool c1a = total == 2 * ni - 1 && exists_partial(ni - 1);
  bool c1b = total == 2 * ni - 1 && exists_partial(ni);
  bool c2 = total == 2 * ni && exists_partial(ni);
  bool c3 = total == 2 * ni + 1 && exists_partial(ni);
  switch (filter) {
    case CaseFilter::any_case: return c1a || c1b || c2 || c3;
    case CaseFilter::case_1a: return c1a;
    case CaseFilter::case_1b: return c1b;
    case CaseFilter::case_2: return c2;
    case CaseFilter::case_3: return c3;
    default: return true;
  }
}

namespace {

// Odometer over monomial choices for a fixed degree composition.
bool visit_composition(std::size_t n, const std::vector<int>& degrees,
                       const std::function<bool(const GeneratorSpec&)>& visit) {
  std::vector<std::vector<Monomial>> lists;
  for (int d : degrees) lists.push_back(monomials_of_degree(n, d));
  std::vector<std::size_t> pos(degrees.size(), 0);
  GeneratorSpec spec{n, std::vector<Monomial>(degrees.size())};
  while (true) {
    for (std::size_t k = 0; k < degrees.size(); ++k) spec.f[k] = lists[k][pos[k]];
    if (!visit(spec)) return false;
    std::size_t k = degrees.size();
    while (k > 0 && pos[k - 1] + 1 == lists[k - 1].size()) pos[--k] = 0;
    if (k == 0) return true;
    ++pos[k - 1];
  }
}

// Compositions of total into parts >= 1, in lexicographic order.
bool visit_compositions(std::size_t n, std::vector<int>& degrees, std::size_t slot, int remaining, CaseFilter filter,
                        const std::function<bool(const GeneratorSpec&)>& visit) {
  const std::size_t slots = degrees.size();
  if (slot + 1 == slots) {
    degrees[slot] = remaining;
    if (!matches_case(n, degrees, filter)) return true;
    return visit_composition(n, degrees, visit);
  }
  for (int d = 1; d <= remaining - static_cast<int>(slots - slot - 1); ++d) {
    degrees[slot] = d;
    if (!visit_compositions(n, degrees, slot + 1, remaining - d, filter, visit)) return false;
  }
  return true;
}

}  // namespace

void for_each_generator(std::size_t n, CaseFilter filter, DegreeWindow window,
                        const std::function<bool(const GeneratorSpec&)>& visit) {
  if (n < 3) throw DomainError("generators need n >= 3");
  if (n > kMaxVars) throw ResourceError("too many variables");
  const int slots = static_cast<int>(2 * n - 2);
  std::vector<int> degrees(2 * n - 2);
  for (int total = std::max(window.lo, slots); total <= window.hi; ++total)
    if (!visit_compositions(n, degrees, 0, total, filter, visit)) return;
}

std::vector<GeneratorSpec> enumerate_generators(std::size_t n, CaseFilter filter, std::optional<DegreeWindow> window) {
  std::vector<GeneratorSpec> out;
  for_each_generator(n, filter, window.value_or(DegreeWindow::standard(n)), [&](const GeneratorSpec& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::size_t count_generators(std::size_t n, CaseFilter filter, DegreeWindow window) {
  std::size_t count = 0;
  for_each_generator(n, filter, window, [&](const GeneratorSpec&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<GeneratorSpec> sample_generators(std::size_t n, CaseFilter filter, DegreeWindow window, std::size_t k,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, GeneratorSpec>> reservoir;
  std::size_t seen = 0;
  for_each_generator(n, filter, window, [&](const GeneratorSpec& s) {
    if (reservoir.size() < k) {
      reservoir.emplace_back(seen, s);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, seen);
      std::size_t r = pick(rng);
      if (r < k) reservoir[r] = {seen, s};
    }
    ++seen;
    return true;
  });
  std::sort(reservoir.begin(), reservoir.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GeneratorSpec> out;
  for (auto& [idx, s] : reservoir) out.push_back(std::move(s));
  return out;
}

// ------------------------------------------------------------ closed form

namespace {

// Integer matrix whose columns are the exponent vectors of the given
// monomials, with the given rows (variables, 0-based) kept.
RationalMatrix exponent_columns(const std::vector<const Monomial*>& cols, std::size_t n, std::size_t skip_row) {
  RationalMatrix m(skip_row < n ? n - 1 : n, cols.size());
  std::size_t r = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == skip_row) continue;
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*cols[c])[v];
    ++r;
  }
  return m;
}

// prod / x^denominator, or nullopt when an exponent would be negative.
std::optional<Monomial> quotient(const Monomial& prod, const std::vector<int>& denominator) {
  Monomial d(prod.nvars(), std::span<const int>(denominator));
  return prod.divide(d);
}

Rational parity(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

}  // namespace

UWord generator_closed_form(const GeneratorSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const auto& f = spec.f;
  UWord out{VectorField(n), {}};

  std::vector<const Monomial*> a_cols;
  for (std::size_t l = 0; l < n; ++l) a_cols.push_back(&f[l]);
  const Rational det_a = determinant(exponent_columns(a_cols, n, n));

  // First-order part. The bracket [f_1..f_n] is det(A) f_1..f_n / (x_1..x_n),
  // so the first column of B_k holds its exponents sum_r i^r - 1.
  if (sgn(det_a) != 0) {
    Monomial all(n);
    for (const auto& m : f) all = all * m;
    Monomial bracket(n);
    for (std::size_t l = 0; l < n; ++l) bracket = bracket * f[l];
    for (std::size_t k = 1; k <= n; ++k) {
      RationalMatrix b(n - 1, n - 1);
      std::size_t r = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (v + 1 == k) continue;
        b(r, 0) = Rational(bracket[v] - 1);
        for (std::size_t c = 1; c + 1 < n; ++c) b(r, c) = f[n + c - 1][v];
        ++r;
      }
      Rational det_b = determinant(b);
      if (sgn(det_b) == 0) continue;
      std::vector<int> denom(n, 2);
      denom[k - 1] = 1;
      auto q = quotient(all, denom);
      if (!q) continue;
      out.first_order += VectorField::term(*q, k, parity(n + k) * det_a * det_b);
    }
  }

  // Second-order pairs.
  for (std::size_t i = 1; i <= n; ++i) {
    VectorField left(n), right(n);
    Monomial left_prod(n);
    std::vector<const Monomial*> left_cols;
    for (std::size_t l = 1; l <= n; ++l)
      if (l != i) {
        left_prod = left_prod * f[l - 1];
        left_cols.push_back(&f[l - 1]);
      }
    Monomial right_prod = f[i - 1];
    std::vector<const Monomial*> right_cols{&f[i - 1]};
    for (std::size_t l = n + 1; l <= 2 * n - 2; ++l) {
      right_prod = right_prod * f[l - 1];
      right_cols.push_back(&f[l - 1]);
    }
    for (std::size_t q = 1; q <= n; ++q) {
      std::vector<int> denom(n, 1);
      denom[q - 1] = 0;
      Rational d = determinant(exponent_columns(left_cols, n, q - 1));
      if (sgn(d) == 0) continue;
      if (auto m = quotient(left_prod, denom)) left += VectorField::term(*m, q, parity(n + q) * d);
    }
    if (left.is_zero()) continue;
    for (std::size_t s = 1; s <= n; ++s) {
      std::vector<int> denom(n, 1);
      denom[s - 1] = 0;
      Rational d = determinant(exponent_columns(right_cols, n, s - 1));
      if (sgn(d) == 0) continue;
      if (auto m = quotient(right_prod, denom)) right += VectorField::term(*m, s, parity(n + s) * d);
    }
    if (right.is_zero()) continue;
    out.second_order.push_back({-parity(i + n), std::move(left), std::move(right)});
  }
  return out;
}

UWord generator_direct(const GeneratorSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::vector<Poly> f;
  for (const auto& m : spec.f) f.push_back(Poly::from_monomial(m));

  std::vector<Poly> head(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Poly> first{nbracket(head)};
  first.insert(first.end(), f.begin() + static_cast<std::ptrdiff_t>(n), f.end());
  UWord out{ad(first), {}};

  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Poly> left_args;
    for (std::size_t l = 1; l <= n; ++l)
      if (l != i) left_args.push_back(f[l - 1]);
    std::vector<Poly> right_args{f[i - 1]};
    right_args.insert(right_args.end(), f.begin() + static_cast<std::ptrdiff_t>(n), f.end());
    VectorField left = ad(left_args);
    if (left.is_zero()) continue;
    VectorField right = ad(right_args);
    if (right.is_zero()) continue;
    out.second_order.push_back({-parity(i + n), std::move(left), std::move(right)});
  }
  return out;
}

}  // namespace nlie
