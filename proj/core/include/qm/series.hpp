#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

/// Dense univariate polynomial in t; entry k is the coefficient of t^k.
using UniPoly = std::vector<Rational>;

UniPoly trim(UniPoly p);
UniPoly multiply(const UniPoly& a, const UniPoly& b);
UniPoly subtract(const UniPoly& a, const UniPoly& b);
/// 1 - t^d
UniPoly one_minus_t_power(unsigned d);
/// t^{deg p} p(1/t)
UniPoly reverse(const UniPoly& p);
/// Lowest k with p[k] != 0; -1 for zero.
int valuation(const UniPoly& p);
std::string to_string(const UniPoly& p, const std::string& var = "t");

/// numerator / denominator with denominator(0) != 0.
struct RationalSeries {
  UniPoly numerator;
  UniPoly denominator;

  /// First `count` Taylor coefficients at t = 0.
  std::vector<Rational> taylor(std::size_t count) const;
  std::string to_string() const;
};

struct StanleyResult {
  bool holds = false;
  /// Shift l in h(t) = (-1)^n t^l h(1/t) when the identity holds.
  int shift = 0;
};

/// Exact test of h(t) = (-1)^n t^l h(1/t) for some integer l.
StanleyResult stanley_check(const RationalSeries& h, unsigned n);

/// Graded dimensions up to a cap and an optional rational closed form.
struct PoincareData {
  std::vector<long> coefficients;
  std::optional<RationalSeries> closed_form;

  /// True when closed_form is absent or its Taylor coefficients match.
  bool closed_form_matches() const;
  bool nonnegative() const;
};

/// Fits N(t)/(1-t)^n when the truncated numerator P(t)(1-t)^n has vanished over its
/// last `margin` coefficients below the cap; nullopt otherwise.
std::optional<RationalSeries> fit_closed_form(const std::vector<long>& coefficients, unsigned n,
                                              unsigned margin = 3);

}  // namespace qm
