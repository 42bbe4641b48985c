#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qm/coxeter.hpp"
#include "qm/polynomial.hpp"
#include "qm/quasiinv.hpp"
#include "qm/rational_op.hpp"

namespace qm {

struct QuantumIntegral {
  enum class Construction { DunklRestricted, Berest };

  Polynomial q;
  RationalOp op;
  Construction construction = Construction::DunklRestricted;
  /// Normalizing constant of the ad-power formula (1 for the Dunkl route).
  Rational constant = 1;
};

std::string to_string(QuantumIntegral::Construction c);

/// Calogero-Moser system of a group with multiplicities.
///
/// H = sum_{jk} G^{-1}_{jk} d_j d_k - sum_s 2 m_s / alpha_s(x) d_{G^{-1} alpha_s},
/// which does not depend on how the roots are scaled.
class CalogeroMoser {
 public:
  CalogeroMoser(const CoxeterGroup& g, const MultiplicityFunction& m);

  const CoxeterGroup& group() const { return *group_; }
  const MultiplicityFunction& multiplicities() const { return m_; }
  std::size_t nvars() const { return group_->dim(); }

  const RationalOp& hamiltonian() const { return hamiltonian_; }
  /// H f by termwise exact division; throws NonPolynomialResult when f leaves Q_m.
  Polynomial apply_hamiltonian(const Polynomial& f) const;
  Polynomial apply_hamiltonian(const Polynomial& f, unsigned power) const;

  /// T_xi = d_xi - sum_s m_s alpha_s(xi) (1 - s) / alpha_s(x), with group parts.
  RationalOp dunkl(std::span<const Rational> direction) const;
  /// T_{e_i} f computed directly on a polynomial.
  Polynomial apply_dunkl(std::size_t i, const Polynomial& f) const;

  /// q(G^{-1} xi) in variables (x, xi): the symbol expected of L_q.
  Polynomial expected_symbol(const Polynomial& q) const;

  /// Restriction of p(G^{-1} T) to invariants. With `verify`, checks the symbol
  /// and [L, H] = 0 and throws SymbolMismatch / CommutatorNonzero.
  QuantumIntegral integral_from_invariant(const Polynomial& p, bool verify = true) const;

  /// c (ad H)^r q with c fixed by the symbol; throws ZeroSymbol or SymbolMismatch.
  QuantumIntegral integral_berest(const Polynomial& q) const;

  /// The constant c for homogeneous q of degree r, from the top-order symbol of (ad H)^r q.
  Rational berest_constant(const Polynomial& q) const;

  /// (L_q f) via c sum_k (-1)^k C(r,k) H^{r-k} (q H^k f) without building L_q.
  Polynomial berest_apply(const Polynomial& q, const Polynomial& f) const;

 private:
  const RationalOp& dunkl_restricted_monomial(const Monomial& beta) const;

  struct RootTerm {
    LinearForm alpha;
    Matrix<Rational> reflection;
    std::vector<Rational> dual;  // G^{-1} alpha
    unsigned m;
  };

  const CoxeterGroup* group_;
  MultiplicityFunction m_;
  std::vector<RootTerm> roots_;
  RationalOp hamiltonian_;
  mutable std::map<Monomial, RationalOp, GrlexGreater> restricted_cache_;
  mutable std::map<unsigned, Rational> berest_constants_;
};

/// Rank-1 Hamiltonian d^2 - (2 mu / x) d for rational mu.
RationalOp rank1_hamiltonian(const Rational& mu);

/// S(m, mu) = prod_{i = m-1..0} (x d - (2 mu + 2 i + 1)), leftmost factor i = m - 1.
RationalOp shift_rank1(unsigned m, const Rational& mu);

/// S(m, mu) H(mu) == H(m + mu) S(m, mu) as operators.
bool verify_intertwiner(unsigned m, const Rational& mu);

/// Graded components of psi in rank 1: coefficient of k^j x^j, normalized to 1 at j = 0.
std::vector<Rational> psi_from_shift(unsigned m, unsigned cap);

/// Kernel dimension of S(m, 0) on each degree 0..cap.
std::vector<long> kernel_series_rank1(unsigned m, unsigned cap);

}  // namespace qm
