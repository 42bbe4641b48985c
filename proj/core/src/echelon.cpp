#include "qm/echelon.hpp"

#include <algorithm>

namespace qm {

EchelonSpan EchelonSpan::of(std::size_t nvars, const std::vector<Polynomial>& generators) {
  EchelonSpan span(nvars);
  for (const auto& g : generators) span.insert(g);
  return span;
}

std::optional<std::size_t> EchelonSpan::pivot_index(const Monomial& m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m, [](const Polynomial& b, const Monomial& key) {
    return GrlexGreater{}(b.leading_term().monomial, key);
  });
  if (it != basis_.end() && it->leading_term().monomial == m)
    return static_cast<std::size_t>(it - basis_.begin());
  return std::nullopt;
}

Polynomial EchelonSpan::reduce(const Polynomial& f) const {
  Polynomial r = f;
  // Basis elements vanish at each other's pivots, so one pass suffices.
  for (const auto& t : f.terms()) {
    auto idx = pivot_index(t.monomial);
    if (idx) r -= basis_[*idx] * t.coefficient;
  }
  return r;
}

bool EchelonSpan::insert(const Polynomial& f) {
  Polynomial r = reduce(f);
  if (r.is_zero()) return false;
  r *= 1 / r.leading_term().coefficient;
  const Monomial lead = r.leading_term().monomial;
  for (auto& b : basis_) {
    const Rational c = b.coefficient(lead);
    if (sgn(c) != 0) b -= r * c;
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), lead, [](const Polynomial& b, const Monomial& key) {
    return GrlexGreater{}(b.leading_term().monomial, key);
  });
  basis_.insert(pos, std::move(r));
  return true;
}

std::optional<std::vector<Rational>> EchelonSpan::coordinates(const Polynomial& f) const {
  if (!contains(f)) return std::nullopt;
  std::vector<Rational> coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = f.coefficient(pivot(i));
  return coords;
}

Polynomial EchelonSpan::combination(const std::vector<Rational>& coords) const {
  Polynomial r(nvars_);
  for (std::size_t i = 0; i < coords.size() && i < basis_.size(); ++i)
    if (sgn(coords[i]) != 0) r += basis_[i] * coords[i];
  return r;
}

}  // namespace qm
