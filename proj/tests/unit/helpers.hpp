#pragma once

#include <random>
#include <span>
#include <vector>

#include "qm/polynomial.hpp"

namespace qm_test {

inline qm::Polynomial var(std::size_t n, std::size_t i) { return qm::Polynomial::variable(n, i); }
inline qm::Polynomial cst(std::size_t n, long c) { return qm::Polynomial::constant(n, qm::Rational(c)); }

/// Random polynomial with small integer coefficients and total degree <= deg.
inline qm::Polynomial random_poly(std::mt19937& rng, std::size_t n, unsigned deg, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  qm::Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(n, 0);
    unsigned left = deg;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = std::uniform_int_distribution<unsigned>(0, left)(rng);
      left -= e[i];
    }
    f += qm::Polynomial::monomial(n, qm::Monomial(std::span<const unsigned>(e)), qm::Rational(coeff(rng)));
  }
  return f;
}

/// Random element of a span with coefficients in [-3, 3], never zero.
template <class Span>
qm::Polynomial random_element(std::mt19937& rng, const Span& span) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  qm::Polynomial f(span.nvars());
  for (const auto& b : span.basis()) f += b * qm::Rational(coeff(rng));
  if (f.is_zero() && span.dim()) f = span.basis().front();
  return f;
}

}  // namespace qm_test
