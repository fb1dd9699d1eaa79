#include "nlie/sln.hpp"

#include <algorithm>
#include <charconv>

#include "nlie/error.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

bool Weight::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](int x) { return x == 0; });
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s + ")";
}

std::vector<int> Weight::partition() const {
  std::vector<int> p(n(), 0);
  for (std::size_t a = labels.size(); a-- > 0;) p[a] = p[a + 1] + labels[a];
  return p;
}

Weight parse_weight(std::string_view text, std::size_t n) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  Weight w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw ParseError("malformed weight component '" + std::string(field) + "'");
    if (value < 0) throw DomainError("weight must be dominant (non-negative labels)");
    w.labels.push_back(value);
    start = end + 1;
  }
  if (w.labels.size() + 1 != n)
    throw ParseError("weight for n = " + std::to_string(n) + " needs " + std::to_string(n - 1) + " labels");
  return w;
}

// ------------------------------------------------------------ root data

RootDatum::RootDatum(std::size_t n_) : n(n_) {
  if (n < 2) throw DomainError("sl_n needs n >= 2");
}

Rational RootDatum::inner(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  if (i + 1 == j || j + 1 == i) return Rational(-1, 2);
  return 0;
}

int RootDatum::cartan(std::size_t i, std::size_t j) const {
  Rational a = 2 * inner(i, j) / inner(j, j);
  return static_cast<int>(a.get_num().get_si());
}

std::vector<std::vector<int>> RootDatum::positive_roots() const {
  std::vector<std::vector<int>> roots;
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t b = a; b < rank(); ++b) {
      std::vector<int> r(rank(), 0);
      for (std::size_t t = a; t <= b; ++t) r[t] = 1;
      roots.push_back(r);
    }
  return roots;
}

Rational RootDatum::inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (sgn(x[i]) != 0 && sgn(y[j]) != 0) s += x[i] * y[j] * inner(i, j);
  return s;
}

std::vector<int> RootDatum::lower(const std::vector<int>& lambda, const std::vector<int>& k) const {
  std::vector<int> mu = lambda;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) mu[i] -= k[j] * cartan(i, j);
  return mu;
}

std::vector<int> simple_reflection(const std::vector<int>& mu, std::size_t i) {
  RootDatum r(mu.size() + 1);
  std::vector<int> out = mu;
  for (std::size_t t = 0; t < mu.size(); ++t) out[t] -= mu[i] * r.cartan(t, i);
  return out;
}

bool is_weight_of(const Weight& lambda, const std::vector<int>& mu_in) {
  RootDatum r(lambda.n());
  const std::size_t rk = r.rank();
  std::vector<int> mu = mu_in;
  // Solve lambda - mu = sum k_j alpha_j over the integers via the partition
  // picture: epsilon coordinates of a weight are determined up to a shift.
  std::vector<int> k(rk, 0);
  {
    // eps(mu) with eps_n = 0, then shift so the coordinate sums agree.
    auto eps = [&](const std::vector<int>& labels) {
      std::vector<long> e(rk + 1, 0);
      for (std::size_t a = rk; a-- > 0;) e[a] = e[a + 1] + labels[a];
      return e;
    };
    auto el = eps(lambda.labels), em = eps(mu);
    long sl = 0, sm = 0;
    for (auto x : el) sl += x;
    for (auto x : em) sm += x;
    long diff = sl - sm;
    if (diff % static_cast<long>(rk + 1) != 0) return false;
    long shift = diff / static_cast<long>(rk + 1);
    long partial = 0;
    for (std::size_t i = 0; i < rk; ++i) {
      partial += el[i] - (em[i] + shift);
      k[i] = static_cast<int>(partial);
    }
  }
  // Reflect into the dominant chamber, tracking lambda - mu in root coordinates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rk; ++i)
      if (mu[i] < 0) {
        k[i] += mu[i];
        mu = simple_reflection(mu, i);
        changed = true;
      }
  }
  return std::all_of(k.begin(), k.end(), [](int x) { return x >= 0; });
}

Multiplicities freudenthal_multiplicities(const Weight& lambda) {
  const std::size_t n = lambda.n();
  RootDatum r(n);
  const std::size_t rk = r.rank();
  const auto p = lambda.partition();
  std::vector<int> box(rk);
  int acc = 0;
  for (std::size_t i = 0; i < rk; ++i) {
    acc += p[i] - p[n - 1 - i];
    box[i] = acc;
  }
  // All root-coordinate vectors in the box, ordered by height.
  std::vector<std::vector<int>> ks;
  std::vector<int> k(rk, 0);
  while (true) {
    ks.push_back(k);
    std::size_t i = 0;
    while (i < rk && k[i] == box[i]) k[i++] = 0;
    if (i == rk) break;
    ++k[i];
  }
  auto height = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::stable_sort(ks.begin(), ks.end(), [&](const auto& a, const auto& b) { return height(a) < height(b); });

  const auto roots = r.positive_roots();
  auto as_rational = [](const std::vector<int>& v) { return std::vector<Rational>(v.begin(), v.end()); };
  // (lambda, alpha_j) = lambda_j / 2 and (delta, alpha_j) = 1 / 2 with (alpha_j, alpha_j) = 1.
  auto lambda_dot = [&](const std::vector<int>& coeffs, int shift) {
    Rational s = 0;
    for (std::size_t j = 0; j < rk; ++j) s += ratio(coeffs[j] * (lambda.labels[j] + shift), 2);
    return s;
  };

  std::map<std::vector<int>, Integer> mult;
  mult[ks.front()] = 1;
  for (std::size_t idx = 1; idx < ks.size(); ++idx) {
    const auto& beta = ks[idx];
    if (!is_weight_of(lambda, r.lower(lambda.labels, beta))) continue;
    Rational sum = 0;
    const auto beta_q = as_rational(beta);
    for (const auto& alpha : roots) {
      const auto alpha_q = as_rational(alpha);
      // (mu + t alpha, alpha) with mu = lambda - beta.
      Rational base = lambda_dot(alpha, 0) - r.inner(beta_q, alpha_q);
      Rational alpha_sq = r.inner(alpha_q, alpha_q);
      for (int t = 1;; ++t) {
        std::vector<int> up(rk);
        bool inside = true;
        for (std::size_t j = 0; j < rk; ++j) {
          up[j] = beta[j] - t * alpha[j];
          if (up[j] < 0) inside = false;
        }
        if (!inside) break;
        auto it = mult.find(up);
        if (it == mult.end()) continue;
        sum += Rational(it->second) * (base + t * alpha_sq);
      }
    }
    Rational denom = 2 * lambda_dot(beta, 1) - r.inner(beta_q, beta_q);
    if (sgn(denom) <= 0) throw Error("Freudenthal denominator vanished at a weight");
    Rational m = 2 * sum / denom;
    if (m.get_den() != 1) throw Error("non-integral Freudenthal multiplicity");
    if (sgn(m) != 0) mult[beta] = m.get_num();
  }

  Multiplicities out;
  for (const auto& [kk, m] : mult) out[r.lower(lambda.labels, kk)] = m.get_ui();
  return out;
}

Integer weyl_dimension(const Weight& lambda) {
  const std::size_t rk = lambda.labels.size();
  Rational d = 1;
  for (std::size_t a = 0; a < rk; ++a)
    for (std::size_t b = a; b < rk; ++b) {
      long num = 0;
      for (std::size_t t = a; t <= b; ++t) num += lambda.labels[t] + 1;
      d *= ratio(num, static_cast<long>(b - a + 1));
    }
  if (d.get_den() != 1) throw Error("non-integral Weyl dimension");
  return d.get_num();
}

// ------------------------------------------------------------ ModVector

void ModVector::add(std::size_t index, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
  }
}

ModVector& ModVector::operator+=(const ModVector& rhs) {
  for (const auto& [i, c] : rhs.coeffs) add(i, c);
  return *this;
}

ModVector& ModVector::operator-=(const ModVector& rhs) {
  for (const auto& [i, c] : rhs.coeffs) add(i, -c);
  return *this;
}

ModVector& ModVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) coeffs.clear();
  for (auto& [i, v] : coeffs) v *= c;
  return *this;
}

// ------------------------------------------------------------ WeightModule

std::vector<int> WeightModule::dynkin(std::size_t index) const {
  return RootDatum(n_).lower(highest_.labels, basis_.at(index).depth);
}

std::vector<int> WeightModule::epsilon(std::size_t index) const {
  const auto& k = basis_.at(index).depth;
  std::vector<int> e(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    e[a] = partition_[a];
    if (a < n_ - 1) e[a] -= k[a];
    if (a > 0) e[a] += k[a - 1];
  }
  return e;
}

ModVector WeightModule::apply(std::size_t a, std::size_t b, const ModVector& v) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) throw DomainError("E_{i,j} index out of range 1.." + std::to_string(n_));
  ModVector out;
  if (a == b) {
    for (const auto& [k, c] : v.coeffs) out.add(k, c * epsilon(k)[a - 1]);
    return out;
  }
  const auto& column = table_[a - 1][b - 1];
  for (const auto& [k, c] : v.coeffs) out += column.at(k) * c;
  return out;
}

ModVector WeightModule::apply_h(std::size_t i, const ModVector& v) const {
  return apply(i, i, v) - apply(i + 1, i + 1, v);
}

Multiplicities WeightModule::weight_dimensions() const {
  Multiplicities out;
  for (std::size_t k = 0; k < dim(); ++k) ++out[dynkin(k)];
  return out;
}

std::string WeightModule::to_string(const ModVector& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : v.coeffs) {
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    Rational mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += basis_[k].label;
  }
  return s;
}

WeightModule build_irrep(const Weight& lambda, std::size_t max_dim) {
  const std::size_t n = lambda.n();
  const std::size_t rk = n - 1;
  RootDatum r(n);
  WeightModule m;
  m.n_ = n;
  m.highest_ = lambda;
  m.partition_ = lambda.partition();
  m.basis_.push_back({std::vector<int>(rk, 0), "v"});

  // raise[i][b] = E_{i,i+1} b, lower[j][b] = E_{j+1,j} b (0-based simple indices).
  std::vector<std::vector<ModVector>> raise(rk, std::vector<ModVector>(1)), lower(rk);
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t b : frontier)
      for (std::size_t j = 0; j < rk; ++j) {
        auto k = m.basis_[b].depth;
        ++k[j];
        groups[k].emplace_back(j, b);
      }
    for (std::size_t j = 0; j < rk; ++j) lower[j].resize(m.basis_.size());

    std::vector<std::size_t> next;
    for (const auto& [k, cands] : groups) {
      // Signature of F_j b: the images E_i F_j b = F_j E_i b + [i = j] <mu_b, alpha_i^vee> b.
      std::vector<std::vector<ModVector>> sigs;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
      for (const auto& [j, b] : cands) {
        std::vector<ModVector> sig(rk);
        const auto mu_b = m.dynkin(b);
        for (std::size_t i = 0; i < rk; ++i) {
          for (const auto& [c, coeff] : raise[i][b].coeffs) sig[i] += lower[j][c] * coeff;
          if (i == j) sig[i].add(b, Rational(mu_b[i]));
          for (const auto& [idx, coeff] : sig[i].coeffs) position.try_emplace({i, idx}, 0);
        }
        sigs.push_back(std::move(sig));
      }
      std::size_t pos = 0;
      for (auto& [key, p] : position) p = pos++;
      auto dense = [&](const std::vector<ModVector>& sig) {
        std::vector<Rational> v(position.size());
        for (std::size_t i = 0; i < rk; ++i)
          for (const auto& [idx, coeff] : sig[i].coeffs) v[position.at({i, idx})] = coeff;
        return v;
      };
      std::vector<std::vector<Rational>> chosen;
      std::vector<std::size_t> chosen_index;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        const auto [j, b] = cands[c];
        auto target = dense(sigs[c]);
        auto coords = solve_in_span(chosen, target);
        if (coords) {
          ModVector image;
          for (std::size_t t = 0; t < coords->size(); ++t) image.add(chosen_index[t], (*coords)[t]);
          lower[j][b] = std::move(image);
          continue;
        }
        const std::size_t idx = m.basis_.size();
        if (idx + 1 > max_dim)
          throw ResourceError("irreducible module " + lambda.to_string() + " exceeds the dimension bound " +
                              std::to_string(max_dim));
        m.basis_.push_back({k, "F" + std::to_string(j + 1) + m.basis_[b].label});
        for (std::size_t i = 0; i < rk; ++i) raise[i].push_back(sigs[c][i]);
        lower[j][b] = ModVector::unit(idx);
        chosen.push_back(std::move(target));
        chosen_index.push_back(idx);
        next.push_back(idx);
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t j = 0; j < rk; ++j) lower[j].resize(m.basis_.size());

  // Full tables: simple operators first, then commutators.
  const std::size_t dim = m.basis_.size();
  m.table_.assign(n, std::vector<std::vector<ModVector>>(n));
  for (std::size_t i = 0; i < rk; ++i) {
    m.table_[i][i + 1] = raise[i];
    m.table_[i + 1][i] = lower[i];
  }
  auto compose = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    // E_{ab} E_{cd} - E_{cd} E_{ab} on every basis vector (0-based indices).
    std::vector<ModVector> out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      ModVector x;
      for (const auto& [t, coeff] : m.table_[c][d][k].coeffs) x += m.table_[a][b][t] * coeff;
      for (const auto& [t, coeff] : m.table_[a][b][k].coeffs) x -= m.table_[c][d][t] * coeff;
      out[k] = std::move(x);
    }
    return out;
  };
  for (std::size_t gap = 2; gap < n; ++gap)
    for (std::size_t a = 0; a + gap < n; ++a) {
      const std::size_t b = a + gap;
      m.table_[a][b] = compose(a, b - 1, b - 1, b);
      m.table_[b][a] = compose(b, b - 1, b - 1, a);
    }
  return m;
}

ModVector act_e(std::size_t i, std::size_t j, const ModVector& v, const WeightModule& m) {
  for (const auto& [k, c] : v.coeffs)
    if (k >= m.dim()) throw DomainError("vector is not in the module");
  return m.apply(i, j, v);
}

std::optional<std::string> check_gl_relations(const WeightModule& m) {
  const std::size_t n = m.n();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      for (std::size_t c = 1; c <= n; ++c)
        for (std::size_t d = 1; d <= n; ++d)
          for (std::size_t k = 0; k < m.dim(); ++k) {
            ModVector e = ModVector::unit(k);
            ModVector lhs = m.apply(a, b, m.apply(c, d, e)) - m.apply(c, d, m.apply(a, b, e));
            ModVector rhs;
            if (b == c) rhs += m.apply(a, d, e);
            if (d == a) rhs -= m.apply(c, b, e);
            if (!(lhs == rhs))
              return "[E_" + std::to_string(a) + std::to_string(b) + ", E_" + std::to_string(c) + std::to_string(d) +
                     "] fails on " + m.basis()[k].label;
          }
  return std::nullopt;
}

std::optional<std::size_t> exceptional_check(const Weight& lambda) {
  std::size_t ones = 0, position = 0;
  for (std::size_t i = 0; i < lambda.labels.size(); ++i) {
    if (lambda.labels[i] == 0) continue;
    if (lambda.labels[i] != 1) return std::nullopt;
    ++ones;
    position = i + 1;
  }
  if (ones == 0) return 0;
  if (ones == 1) return position;
  return std::nullopt;
}

}  // namespace nlie
