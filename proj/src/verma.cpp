#include "nlie/verma.hpp"

#include "nlie/error.hpp"

namespace nlie {

// ------------------------------------------------------------ VermaElement

VermaElement VermaElement::highest(const WeightModule& module, int depth_bound) {
  return basis(module, Monomial(module.n()), 0, depth_bound);
}

VermaElement VermaElement::basis(const WeightModule& module, const Monomial& pbw, std::size_t index,
                                 int depth_bound) {
  if (index >= module.dim()) throw DomainError("basis index outside the module");
  VermaElement v(module, depth_bound);
  v.add(pbw, index, 1);
  return v;
}

int VermaElement::depth() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first.degree());
  return d;
}

VermaElement VermaElement::homogeneous_part(int depth) const {
  VermaElement out(*module_, depth_bound_);
  for (const auto& [key, c] : terms_)
    if (key.first.degree() == depth) out.terms_.emplace(key, c);
  return out;
}

void VermaElement::add(const Monomial& pbw, std::size_t index, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{pbw, index}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

VermaElement& VermaElement::operator+=(const VermaElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, c);
  return *this;
}

VermaElement& VermaElement::operator-=(const VermaElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, -c);
  return *this;
}

VermaElement& VermaElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string pbw_to_string(const Monomial& a) {
  std::string s = a.to_string();
  for (auto& ch : s)
    if (ch == 'x') ch = 'D';
  return s;
}

std::string VermaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    Rational mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += pbw_to_string(key.first) + " (x) " + module_->basis()[key.second].label;
  }
  return s;
}

// ------------------------------------------------------------ action

namespace {

VectorField truncate_field(const VectorField& x, int max_degree) {
  std::vector<Poly> coeffs;
  for (const auto& c : x.coeffs()) {
    Poly p(c.nvars());
    for (const auto& [m, v] : c.terms())
      if (m.degree() <= max_degree) p.add_term(m, v);
    coeffs.push_back(std::move(p));
  }
  return VectorField(std::move(coeffs));
}

// Accumulates c * X . (D^a (x) w) into out. X D_i = D_i X + [X, D_i] with
// [X, D_i] = -differentiate(X, i).
void act_rec(const VectorField& x, const Monomial& a, std::size_t w, const Rational& c, VermaElement& out) {
  if (x.is_zero()) return;
  const std::size_t n = x.nvars();
  const WeightModule& module = out.module();
  if (a.is_one()) {
    for (std::size_t i = 1; i <= n; ++i) {
      const Poly& f = x.coeff(i);
      Rational c0 = f.constant_term();
      if (sgn(c0) != 0) out.add(Monomial::variable(n, i), w, c * c0);
      // x_j D_i acts on F as E_{j,i}.
      for (std::size_t j = 1; j <= n; ++j) {
        Rational cj = f.coefficient(Monomial::variable(n, j));
        if (sgn(cj) == 0) continue;
        for (const auto& [k, ck] : module.apply(j, i, ModVector::unit(w)).coeffs) out.add(Monomial(n), k, c * cj * ck);
      }
    }
    return;
  }
  std::size_t i = 0;
  while (a[i] == 0) ++i;
  Monomial rest = a;
  rest.set(i, a[i] - 1);
  const int d = rest.degree();
  VermaElement inner(module, out.depth_bound());
  act_rec(truncate_field(x, d + 1), rest, w, c, inner);
  const Monomial di = Monomial::variable(n, i + 1);
  for (const auto& [key, v] : inner.terms()) out.add(key.first * di, key.second, v);
  act_rec(-truncate_field(differentiate(x, i + 1), d + 1), rest, w, c, out);
}

}  // namespace

VermaElement verma_act(const VectorField& x, const VermaElement& v) {
  if (x.nvars() != v.nvars()) throw DomainError("field and module have different variable counts");
  if (!sn_membership(x)) throw DomainError("field is not divergence-free: " + x.to_string());
  VermaElement out(v.module(), v.depth_bound());
  for (const auto& [key, c] : v.terms()) {
    VectorField xt = truncate_field(x, key.first.degree() + 1);
    act_rec(xt, key.first, key.second, c, out);
  }
  if (out.depth() > v.depth_bound())
    throw ResourceError("Verma action exceeds the depth bound " + std::to_string(v.depth_bound()));
  return out;
}

VermaElement verma_act_word(const UWord& w, const VermaElement& v) {
  VermaElement out = verma_act(w.first_order, v);
  for (const auto& pair : w.second_order) {
    if (sgn(pair.coeff) == 0) continue;
    VermaElement inner = verma_act(pair.right, v);
    if (inner.is_zero()) continue;
    out += verma_act(pair.left, inner) * pair.coeff;
  }
  return out;
}

// ------------------------------------------------------------ coordinates

DepthCoordinates::DepthCoordinates(const WeightModule& module, int depth)
    : module_(&module), depth_(depth), fdim_(module.dim()) {
  if (depth >= 0) pbw_ = monomials_of_degree(module.n(), depth);
  for (std::size_t t = 0; t < pbw_.size(); ++t) pbw_index_[pbw_[t]] = t;
}

std::vector<Rational> DepthCoordinates::coordinates(const VermaElement& v) const {
  std::vector<Rational> out(size());
  for (const auto& [key, c] : v.terms()) {
    if (key.first.degree() != depth_) continue;
    out[pbw_index_.at(key.first) * fdim_ + key.second] = c;
  }
  return out;
}

VermaElement DepthCoordinates::element(const std::vector<Rational>& coords, int depth_bound) const {
  VermaElement v(*module_, depth_bound);
  for (std::size_t t = 0; t < coords.size(); ++t) v.add(pbw_[t / fdim_], t % fdim_, coords[t]);
  return v;
}

VermaElement DepthCoordinates::basis_element(std::size_t index, int depth_bound) const {
  return VermaElement::basis(*module_, pbw_[index / fdim_], index % fdim_, depth_bound);
}

// ------------------------------------------------------------ singular vectors

std::size_t SingularVectors::nontrivial_count() const {
  std::size_t c = 0;
  for (std::size_t d = 1; d < by_depth.size(); ++d) c += by_depth[d].size();
  return c;
}

SingularVectors singular_vectors(const WeightModule& module, int max_depth, bool include_degree_two) {
  if (max_depth < 0) throw DomainError("depth must be non-negative");
  if (max_depth > 6) throw ResourceError("singular-vector depth above 6 is outside the supported budget");
  const std::size_t n = module.n();
  std::vector<std::pair<int, VectorField>> fields;
  for (int j = 1; j <= (include_degree_two ? 2 : 1); ++j)
    for (auto& f : sn_graded_basis(n, j)) fields.emplace_back(j, std::move(f));

  SingularVectors out;
  out.max_depth = max_depth;
  out.include_degree_two = include_degree_two;
  for (int k = 0; k <= max_depth; ++k) {
    DepthCoordinates dc(module, k);
    // Constraint rows: for each field and each image coordinate, a linear form
    // in the unknown coefficients.
    std::vector<DepthCoordinates> targets;
    for (int j = 1; j <= 2; ++j) targets.emplace_back(module, k - j);
    std::vector<std::vector<std::vector<Rational>>> columns(fields.size());
    for (std::size_t t = 0; t < dc.size(); ++t) {
      VermaElement e = dc.basis_element(t, k);
      for (std::size_t f = 0; f < fields.size(); ++f) {
        const auto& [j, x] = fields[f];
        if (k - j < 0) continue;
        columns[f].push_back(targets[static_cast<std::size_t>(j - 1)].coordinates(verma_act(x, e)));
      }
    }
    RowSpace constraints(dc.size());
    for (std::size_t f = 0; f < fields.size() && constraints.rank() < dc.size(); ++f) {
      if (columns[f].empty()) continue;
      const std::size_t rows = columns[f].front().size();
      for (std::size_t r = 0; r < rows && constraints.rank() < dc.size(); ++r) {
        std::vector<Rational> row(dc.size());
        bool nonzero = false;
        for (std::size_t t = 0; t < dc.size(); ++t) {
          row[t] = columns[f][t][r];
          nonzero = nonzero || sgn(row[t]) != 0;
        }
        if (nonzero) constraints.insert(std::move(row));
      }
    }
    RationalMatrix system(0, dc.size());
    for (const auto& row : constraints.rows()) system.append_row(row);
    std::vector<VermaElement> sols;
    for (const auto& v : nullspace(system)) sols.push_back(dc.element(v, max_depth));
    out.by_depth.push_back(std::move(sols));
  }
  return out;
}

// ------------------------------------------------------------ Sing_+

SingPlus::SingPlus(const WeightModule& module, int max_depth, const SingularVectors& sing)
    : module_(&module), max_depth_(max_depth) {
  if (sing.max_depth < max_depth) throw DomainError("singular vectors were computed to a smaller depth");
  const std::size_t n = module.n();
  for (int k = 0; k <= max_depth; ++k) {
    coords_.emplace_back(module, k);
    spaces_.emplace_back(coords_.back().size());
  }
  for (int k = 1; k <= max_depth; ++k) {
    auto& space = spaces_[static_cast<std::size_t>(k)];
    const auto& dc = coords_[static_cast<std::size_t>(k)];
    for (const auto& s : sing.by_depth[static_cast<std::size_t>(k)]) space.insert(dc.coordinates(s));
    // D_i times the previous depth.
    const auto& prev = coords_[static_cast<std::size_t>(k - 1)];
    for (const auto& row : spaces_[static_cast<std::size_t>(k - 1)].rows()) {
      VermaElement v = prev.element(row, max_depth);
      for (std::size_t i = 1; i <= n; ++i) {
        VermaElement shifted(module, max_depth);
        for (const auto& [key, c] : v.terms()) shifted.add(key.first * Monomial::variable(n, i), key.second, c);
        space.insert(dc.coordinates(shifted));
      }
    }
  }
}

std::vector<VermaElement> SingPlus::basis(int depth) const {
  std::vector<VermaElement> out;
  const auto& dc = coords_.at(static_cast<std::size_t>(depth));
  for (const auto& row : spaces_.at(static_cast<std::size_t>(depth)).rows()) out.push_back(dc.element(row, max_depth_));
  return out;
}

bool SingPlus::contains(const VermaElement& v) const {
  if (v.depth() > max_depth_)
    throw ResourceError("membership test beyond the computed depth " + std::to_string(max_depth_));
  for (int k = 0; k <= v.depth(); ++k) {
    auto coords = coords_[static_cast<std::size_t>(k)].coordinates(v);
    bool zero = true;
    for (const auto& c : coords) zero = zero && sgn(c) == 0;
    if (zero) continue;
    if (!spaces_[static_cast<std::size_t>(k)].contains(std::move(coords))) return false;
  }
  return true;
}

bool SingPlus::invariant_under(const std::vector<VectorField>& fields, std::string* failure) const {
  for (int k = 0; k <= max_depth_; ++k)
    for (const auto& b : basis(k))
      for (const auto& x : fields) {
        VermaElement wide(*module_, max_depth_ + 1);
        wide += b;
        VermaElement image = verma_act(x, wide);
        VermaElement kept(*module_, max_depth_);
        for (int d = 0; d <= max_depth_; ++d) kept += image.homogeneous_part(d);
        if (!contains(kept)) {
          if (failure) *failure = x.to_string() + " moves " + b.to_string() + " outside";
          return false;
        }
      }
  return true;
}

SingPlus sing_plus_submodule(const WeightModule& module, int max_depth) {
  return SingPlus(module, max_depth, singular_vectors(module, max_depth, true));
}

}  // namespace nlie
