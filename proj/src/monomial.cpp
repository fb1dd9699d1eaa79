#include "nlie/monomial.hpp"

#include "nlie/error.hpp"

namespace nlie {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars == 0 || nvars > kMaxVars)
    throw DomainError("variable count must lie in 1.." + std::to_string(kMaxVars));
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<int> exponents)
    : Monomial(nvars, std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw DomainError("exponent vector length differs from variable count");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw DomainError("variable index x" + std::to_string(i) + " out of range");
  Monomial m(nvars);
  m.exps_[i - 1] = 1;
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw DomainError("exponent index out of range");
  if (e < 0 || e > 0xffff) throw DomainError("exponent out of range");
  exps_[i] = static_cast<Exponent>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < nvars_; ++i) d += exps_[i];
  return d;
}

std::vector<int> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw DomainError("monomial variable counts differ");
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] + other.exps_[i]);
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw DomainError("monomial variable counts differ");
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] < other.exps_[i]) return std::nullopt;
    r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const { return other.divide(*this).has_value(); }

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != other.exps_[i]) return exps_[i] <=> other.exps_[i];
  return nvars_ <=> other.nvars_;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill(std::size_t nvars, std::size_t pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.set(pos, e);
    fill(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(nvars);
  fill(nvars, 0, degree, cur, out);
  // Generated with x1's exponent increasing, which is already ascending
  // graded-lex within one degree.
  return out;
}

}  // namespace nlie
