#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/polynomial.hpp"
#include "qm/rational.hpp"

namespace qm {

/// A nonzero covector x -> sum_i c_i x_i.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coefficients);

  std::size_t nvars() const { return coefficients_.size(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }

  /// Value on a vector of V.
  Rational operator()(std::span<const Rational> v) const;
  Polynomial to_polynomial() const;

  /// Variable solved for in division: largest |c_i|, ties to the lowest index.
  std::size_t pivot() const;

  /// Splits this form as scale * primitive(), where primitive() has coprime integer
  /// coefficients and a positive first nonzero entry.
  LinearForm primitive() const;
  Rational scale_to_primitive() const;

  /// The form x -> l(M x).
  LinearForm compose(const Matrix<Rational>& m) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return a.coefficients_ < b.coefficients_;
  }

 private:
  std::vector<Rational> coefficients_;
};

/// LinearFormPower: l^exponent, exponent >= 1.
struct LinearFormPower {
  LinearForm form;
  unsigned exponent = 1;
};

/// Returns q with q * l == p, or throws NotDivisible carrying the remainder.
Polynomial exact_divide(const Polynomial& p, const LinearForm& l);

/// Non-throwing variant: returns false (and leaves `quotient` unspecified) if l does not divide p.
bool try_divide(const Polynomial& p, const LinearForm& l, Polynomial& quotient);

}  // namespace qm
