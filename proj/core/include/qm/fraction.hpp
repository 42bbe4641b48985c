#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qm/linear_form.hpp"
#include "qm/matrix.hpp"
#include "qm/polynomial.hpp"

namespace qm {

/// Rational function numerator / prod_k l_k^{e_k} with l_k primitive linear forms.
///
/// Arithmetic keeps the denominator factored and does not cancel; reduce()
/// strips common linear factors, after which the representation is canonical.
class Fraction {
 public:
  using Denominator = std::map<LinearForm, unsigned>;

  explicit Fraction(std::size_t nvars = 0) : numerator_(nvars) {}
  explicit Fraction(Polynomial numerator) : numerator_(std::move(numerator)) {}
  /// Forms in `denominator` need not be primitive; scalars move to the numerator.
  Fraction(Polynomial numerator, const std::vector<LinearFormPower>& denominator);

  static Fraction inverse_power(const LinearForm& l, unsigned exponent);

  std::size_t nvars() const { return numerator_.nvars(); }
  const Polynomial& numerator() const { return numerator_; }
  const Denominator& denominator() const { return denominator_; }
  unsigned denominator_degree() const;
  bool is_zero() const { return numerator_.is_zero(); }
  bool has_denominator() const { return !denominator_.empty(); }
  /// Homogeneity degree (numerator degree minus denominator degree); requires homogeneity.
  int degree() const;

  Fraction& operator+=(const Fraction& other);
  Fraction& operator-=(const Fraction& other);
  Fraction& operator*=(const Fraction& other);
  Fraction& operator*=(const Polynomial& p);
  Fraction& operator*=(const Rational& s);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  Fraction operator-() const;

  Fraction derivative(std::size_t index) const;
  /// x -> f(M x).
  Fraction substitute(const Matrix<Rational>& m) const;

  /// Cancels common linear factors; afterwards equality is structural.
  Fraction& reduce();
  /// Throws NonPolynomialResult unless the reduced denominator is trivial.
  Polynomial to_polynomial() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Structural comparison; meaningful for reduced fractions.
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

 private:
  void bring_to(const Denominator& target);

  Polynomial numerator_;
  Denominator denominator_;
};

}  // namespace qm
