#include "nlie/random.hpp"

#include <map>

namespace nlie {

Monomial RandomSource::monomial(std::size_t nvars, int min_degree, int max_degree) {
  int d = uniform(min_degree, max_degree);
  Monomial m(nvars);
  for (int k = 0; k < d; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1));
    m.set(i, m[i] + 1);
  }
  return m;
}

Poly RandomSource::poly(std::size_t nvars, int max_degree, int max_terms) {
  Poly p(nvars);
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int c = uniform(-3, 3);
    if (c == 0) c = 1;
    p.add_term(monomial(nvars, 0, max_degree), c);
  }
  return p;
}

VectorField RandomSource::sn_field(std::size_t nvars, int max_degree, int max_terms) {
  static thread_local std::map<std::pair<std::size_t, int>, std::vector<VectorField>> cache;
  VectorField x(nvars);
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int j = uniform(-1, max_degree);
    auto& basis = cache[{nvars, j}];
    if (basis.empty()) basis = sn_graded_basis(nvars, j);
    const auto& b = basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
    int c = uniform(-2, 2);
    if (c == 0) c = 1;
    x += b * Rational(c);
  }
  return x;
}

}  // namespace nlie
