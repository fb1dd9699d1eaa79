#include "nlie/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nlie/error.hpp"

namespace nlie {

Poly::Poly(std::size_t nvars, std::optional<int> truncation) : nvars_(nvars), truncation_(truncation) {
  if (nvars == 0 || nvars > kMaxVars)
    throw DomainError("variable count must lie in 1.." + std::to_string(kMaxVars));
  if (truncation && *truncation < 0) throw DomainError("negative truncation bound");
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::from_monomial(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) { return from_monomial(Monomial::variable(nvars, i)); }

Poly Poly::with_truncation(std::optional<int> bound) const {
  Poly r(nvars_, bound);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

int Poly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DomainError("monomial variable count differs from polynomial");
  if (sgn(c) == 0 || !admits(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::homogeneous_part(int d) const {
  Poly r(nvars_, truncation_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

void Poly::check_compatible(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_)
    throw DomainError("polynomial variable counts differ (" + std::to_string(nvars_) + " vs " +
                      std::to_string(rhs.nvars_) + ")");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_compatible(rhs);
  if (rhs.truncation_ && (!truncation_ || *rhs.truncation_ < *truncation_)) *this = with_truncation(rhs.truncation_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_compatible(rhs);
  if (rhs.truncation_ && (!truncation_ || *rhs.truncation_ < *truncation_)) *this = with_truncation(rhs.truncation_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.check_compatible(rhs);
  std::optional<int> bound = lhs.truncation_;
  if (rhs.truncation_ && (!bound || *rhs.truncation_ < *bound)) bound = rhs.truncation_;
  Poly r(lhs.nvars_, bound);
  Rational prod;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma * mb;
      if (!r.admits(m)) continue;
      prod = ca * cb;
      r.add_term(m, prod);
    }
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    Poly result(nvars_);
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign < 0 ? Rational(-c) : c);
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m(nvars_);
    Rational c = 1;
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        ++pos_;
        long idx = parse_uint("variable index");
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars_)
          throw ParseError("variable index x" + std::to_string(idx) + " out of range for " +
                           std::to_string(nvars_) + " variables");
        long e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_uint("exponent");
        }
        Monomial v(nvars_);
        v.set(static_cast<std::size_t>(idx - 1), static_cast<int>(e));
        m = m * v;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational");
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        c *= parse_rational(text_.substr(start, pos_ - start));
      } else {
        fail("expected a coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  long parse_uint(const char* what) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    if (pos_ - start > 6) fail(std::string(what) + " too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

// ------------------------------------------------------------- operations

Poly poly_arith(const Poly& lhs, const Poly& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return lhs + rhs;
    case ArithOp::sub:
      return lhs - rhs;
    case ArithOp::mul:
      return lhs * rhs;
  }
  throw DomainError("unknown arithmetic operation");
}

Poly partial_derivative(const Poly& p, std::size_t i) {
  if (i < 1 || i > p.nvars())
    throw DomainError("derivative index " + std::to_string(i) + " out of range for " + std::to_string(p.nvars()) +
                      " variables");
  Poly r(p.nvars(), p.truncation());
  for (const auto& [m, c] : p.terms()) {
    int e = m[i - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.set(i - 1, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Poly exact_divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.nvars() != d.nvars()) throw DomainError("polynomial variable counts differ");
  const auto& [lead_m, lead_c] = *d.terms().rbegin();
  Poly quotient(p.nvars());
  Poly rest = p.with_truncation(std::nullopt);
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms().rbegin();
    auto qm = rm.divide(lead_m);
    if (!qm) throw DomainError("polynomial division is not exact");
    Poly step = Poly::from_monomial(*qm, rc / lead_c);
    quotient += step;
    rest -= step * d;
  }
  return quotient;
}

namespace {

Poly laplace(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  const std::size_t nvars = m[0][0].nvars();
  if (k == 1) return m[rows[0]][cols[0]];
  if (k == 2) {
    return m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]];
  }
  // Expand along the column with the most terms so the large entries are
  // multiplied only once against small minors.
  std::size_t best = 0, best_size = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t sz = 0;
    for (std::size_t r : rows) sz += m[r][cols[j]].size();
    if (sz >= best_size) {
      best = j;
      best_size = sz;
    }
  }
  std::optional<int> bound = m[rows[0]][cols[0]].truncation();
  Poly result(nvars, bound);
  std::size_t col = cols[best];
  std::vector<std::size_t> sub_cols;
  for (std::size_t j = 0; j < k; ++j)
    if (j != best) sub_cols.push_back(cols[j]);
  for (std::size_t i = 0; i < k; ++i) {
    const Poly& entry = m[rows[i]][col];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_rows;
    for (std::size_t r = 0; r < k; ++r)
      if (r != i) sub_rows.push_back(rows[r]);
    Poly minor = laplace(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    Poly term = entry * minor;
    if ((i + best) % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

Poly bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  const std::size_t nvars = a[0][0].nvars();
  Poly prev = Poly::constant(nvars, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly(nvars);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev);
      }
    }
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Poly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant needs a square matrix");
  const std::size_t nvars = m[0][0].nvars();
  bool truncated = false;
  for (const auto& row : m)
    for (const auto& e : row) {
      if (e.nvars() != nvars) throw DomainError("matrix entries have different variable counts");
      truncated = truncated || e.truncation().has_value();
    }
  if (n <= 4 || truncated) {
    std::vector<std::size_t> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return laplace(m, rows, cols);
  }
  return bareiss(m);
}

}  // namespace nlie
