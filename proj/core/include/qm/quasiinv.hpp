#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/coxeter.hpp"
#include "qm/echelon.hpp"
#include "qm/linear_form.hpp"
#include "qm/polynomial.hpp"
#include "qm/series.hpp"

namespace qm {

/// One hyperplane condition: q - s q divisible by alpha^{2m+1}.
struct HyperplaneCondition {
  LinearForm alpha;
  Matrix<Rational> reflection;
  unsigned multiplicity = 0;
};

/// Hyperplanes with multiplicities; each carries the reflection orthogonal for
/// the standard inner product.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws DimensionMismatch on mixed dimensions and Error on proportional covectors.
  Arrangement(std::vector<LinearForm> covectors, std::vector<unsigned> multiplicities);

  /// Parses "a1 a2 : m ; b1 b2 : m" (covector entries, then multiplicity).
  static Arrangement parse(const std::string& text);

  std::size_t dim() const { return dim_; }
  const std::vector<HyperplaneCondition>& hyperplanes() const { return hyperplanes_; }
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<HyperplaneCondition> hyperplanes_;
};

std::vector<HyperplaneCondition> conditions(const CoxeterGroup& g, const MultiplicityFunction& m);

struct QuasiinvarianceResult {
  bool holds = true;
  std::optional<std::size_t> failing_reflection;
  /// Exponent at which division failed and the remainder there.
  unsigned divided = 0;
  Polynomial remainder;
};

/// Checks q - s q divisible by alpha_s^{2 m_s + 1} by successive exact division.
QuasiinvarianceResult is_quasiinvariant(const Polynomial& q, const std::vector<HyperplaneCondition>& conds);
QuasiinvarianceResult is_quasiinvariant(const Polynomial& q, const CoxeterGroup& g, const MultiplicityFunction& m);

/// Echelon basis of the degree-j part of Q_m, as a nullspace of the vanishing
/// conditions written in coordinates adapted to each hyperplane.
EchelonSpan qm_slice(std::size_t nvars, const std::vector<HyperplaneCondition>& conds, unsigned j);
EchelonSpan qm_slice(const CoxeterGroup& g, const MultiplicityFunction& m, unsigned j);

/// Q_m with its slices computed on demand and kept.
class QuasiinvariantRing {
 public:
  QuasiinvariantRing(const CoxeterGroup& g, const MultiplicityFunction& m);
  explicit QuasiinvariantRing(const Arrangement& a);

  std::size_t nvars() const { return nvars_; }
  const std::vector<HyperplaneCondition>& conditions() const { return conds_; }
  const EchelonSpan& slice(unsigned j) const;
  std::vector<long> dimensions(unsigned cap) const;
  /// Slice dimensions 0..cap with a fitted closed form N(t)/(1-t)^n when it stabilizes.
  PoincareData poincare(unsigned cap) const;

 private:
  std::size_t nvars_;
  std::vector<HyperplaneCondition> conds_;
  mutable std::map<unsigned, EchelonSpan> slices_;
};

inline PoincareData poincare_series(const CoxeterGroup& g, const MultiplicityFunction& m, unsigned cap) {
  return QuasiinvariantRing(g, m).poincare(cap);
}
inline PoincareData poincare_series(const Arrangement& a, unsigned cap) { return QuasiinvariantRing(a).poincare(cap); }

}  // namespace qm
