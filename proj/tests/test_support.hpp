#ifndef ACSV_TESTS_TEST_SUPPORT_HPP
#define ACSV_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "acsv/parse.hpp"
#include "acsv/polynomial.hpp"

namespace acsv::testing {

inline RingPtr ring_of(std::vector<std::string> names) {
  return make_ring(std::move(names));
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

/// Random polynomial with up to `max_terms` terms, total degree <= max_degree
/// and integer coefficients in [-coeff, coeff].
inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring,
                                    int max_degree, int max_terms, int coeff = 9) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> var(0, static_cast<int>(ring->size()) - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      auto v = static_cast<std::size_t>(var(rng));
      m.set(v, m[v] + 1u);
    }
    terms.push_back({m, Rational(c(rng))});
  }
  return Polynomial(ring, std::move(terms));
}

inline Polynomial random_nonzero(std::mt19937& rng, const RingPtr& ring,
                                 int max_degree, int max_terms) {
  while (true) {
    Polynomial p = random_polynomial(rng, ring, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace acsv::testing

#endif  // ACSV_TESTS_TEST_SUPPORT_HPP
