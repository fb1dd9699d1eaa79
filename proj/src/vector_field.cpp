#include "nlie/vector_field.hpp"

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

VectorField::VectorField(std::size_t nvars) {
  coeffs_.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) coeffs_.emplace_back(nvars);
}

VectorField::VectorField(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.nvars() != coeffs_.size())
      throw DomainError("vector field needs one coefficient per variable, each in " + std::to_string(coeffs_.size()) +
                        " variables");
}

VectorField VectorField::partial(std::size_t nvars, std::size_t i) {
  return term(Monomial(nvars), i);
}

VectorField VectorField::term(const Monomial& m, std::size_t i, const Rational& c) {
  VectorField v(m.nvars());
  if (i < 1 || i > m.nvars()) throw DomainError("derivation index out of range");
  v.coeffs_[i - 1].add_term(m, c);
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& rhs) {
  if (rhs.nvars() != nvars()) throw DomainError("vector field variable counts differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
  if (rhs.nvars() != nvars()) throw DomainError("vector field variable counts differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

VectorField operator*(const Poly& p, const VectorField& v) {
  if (p.nvars() != v.nvars()) throw DomainError("vector field variable counts differ");
  VectorField r(v.nvars());
  for (std::size_t i = 0; i < v.nvars(); ++i) r.coeffs_[i] = p * v.coeffs_[i];
  return r;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ';';
    out += coeffs_[i].to_string();
  }
  return out;
}

VectorField parse_vector_field(std::string_view text, std::size_t nvars) {
  std::vector<Poly> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view slot = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    bool blank = slot.find_first_not_of(" \t") == std::string_view::npos;
    coeffs.push_back(blank ? Poly(nvars) : parse_poly(slot, nvars));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (coeffs.size() != nvars)
    throw ParseError("vector field needs " + std::to_string(nvars) + " ';'-separated coefficients, got " +
                     std::to_string(coeffs.size()));
  return VectorField(std::move(coeffs));
}

Poly vf_apply(const VectorField& x, const Poly& p) {
  if (x.nvars() != p.nvars()) throw DomainError("vector field and polynomial variable counts differ");
  Poly r(p.nvars(), p.truncation());
  for (std::size_t i = 1; i <= x.nvars(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    r += x.coeff(i) * partial_derivative(p, i);
  }
  return r;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  if (x.nvars() != y.nvars()) throw DomainError("vector field variable counts differ");
  std::vector<Poly> coeffs;
  coeffs.reserve(x.nvars());
  for (std::size_t i = 1; i <= x.nvars(); ++i) coeffs.push_back(vf_apply(x, y.coeff(i)) - vf_apply(y, x.coeff(i)));
  return VectorField(std::move(coeffs));
}

Poly divergence(const VectorField& x) {
  Poly r(x.nvars());
  for (std::size_t i = 1; i <= x.nvars(); ++i) r += partial_derivative(x.coeff(i), i);
  return r;
}

bool sn_membership(const VectorField& x) { return divergence(x).is_zero(); }

VectorField differentiate(const VectorField& x, std::size_t i) {
  std::vector<Poly> coeffs;
  coeffs.reserve(x.nvars());
  for (const auto& c : x.coeffs()) coeffs.push_back(partial_derivative(c, i));
  return VectorField(std::move(coeffs));
}

GradedField grade_decompose(const VectorField& x) {
  GradedField out;
  for (std::size_t i = 1; i <= x.nvars(); ++i) {
    for (const auto& [m, c] : x.coeff(i).terms()) {
      auto [it, inserted] = out.try_emplace(m.degree() - 1, x.nvars());
      it->second += VectorField::term(m, i, c);
    }
  }
  return out;
}

VectorField reassemble(const GradedField& g, std::size_t nvars) {
  VectorField r(nvars);
  for (const auto& [j, part] : g) r += part;
  return r;
}

std::vector<VectorField> sn_graded_basis(std::size_t nvars, int j) {
  if (j < -1) return {};
  auto coeff_monos = monomials_of_degree(nvars, j + 1);
  auto div_monos = monomials_of_degree(nvars, j);
  // Unknowns: coefficient of m * d_i for each (m, i).
  std::vector<VectorField> generators;
  for (std::size_t i = 1; i <= nvars; ++i)
    for (const auto& m : coeff_monos) generators.push_back(VectorField::term(m, i));
  if (div_monos.empty()) return generators;
  RationalMatrix a(div_monos.size(), generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Poly d = divergence(generators[g]);
    for (std::size_t r = 0; r < div_monos.size(); ++r) a(r, g) = d.coefficient(div_monos[r]);
  }
  std::vector<VectorField> basis;
  for (const auto& v : nullspace(a)) {
    VectorField f(nvars);
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (sgn(v[g]) != 0) f += generators[g] * v[g];
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace nlie
