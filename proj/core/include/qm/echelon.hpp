#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qm/polynomial.hpp"
#include "qm/rational.hpp"

namespace qm {

/// Span of polynomials kept in reduced echelon form with respect to grlex:
/// every basis element has leading coefficient 1 and a distinct leading
/// monomial (its pivot) at which all other basis elements vanish.
/// The basis is therefore a canonical function of the span.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t nvars = 0) : nvars_(nvars) {}
  static EchelonSpan of(std::size_t nvars, const std::vector<Polynomial>& generators);

  std::size_t nvars() const { return nvars_; }
  std::size_t dim() const { return basis_.size(); }
  /// Sorted by descending pivot.
  const std::vector<Polynomial>& basis() const { return basis_; }
  const Monomial& pivot(std::size_t i) const { return basis_[i].leading_term().monomial; }

  /// Adds f to the span; returns true when the dimension grew.
  bool insert(const Polynomial& f);
  /// f minus its projection onto the pivots; zero iff f lies in the span.
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  /// Coordinates against basis(), or nullopt when f is not in the span.
  std::optional<std::vector<Rational>> coordinates(const Polynomial& f) const;
  Polynomial combination(const std::vector<Rational>& coords) const;

  /// Index of the basis element with the given pivot, if any.
  std::optional<std::size_t> pivot_index(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::vector<Polynomial> basis_;
};

}  // namespace qm
