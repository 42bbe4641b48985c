#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qm/error.hpp"
#include "qm/matrix.hpp"
#include "qm/monomial.hpp"
#include "qm/rational.hpp"

namespace qm {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& value);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, const Monomial& m, const Rational& c = 1);
  /// sum_i coefficients[i] * x_i
  static Polynomial linear(std::span<const Rational> coefficients);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial multiply_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t index) const;
  /// d^beta f for a multi-index beta.
  Polynomial derivative(const Monomial& beta) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Returns f(M x): variable x_i is replaced by sum_j M(i,j) x_j.
  /// M may be non-square; the result lives in M.cols() variables.
  Polynomial substitute(const Matrix<Rational>& m) const;
  Polynomial homogeneous_component(unsigned degree) const;
  /// Embeds into a ring with more variables, shifting indices by `offset`.
  Polynomial embed(std::size_t nvars, std::size_t offset) const;

  /// Canonical rendering in descending grlex order, e.g. "2*x1^2*x2 - 1/3*x2".
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Raised by exact division; carries the nonzero remainder as witness.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, Polynomial remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const Polynomial& remainder() const { return remainder_; }

 private:
  Polynomial remainder_;
};

/// Default variable names x1..xn (or "x" when n == 1).
std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem = "x");

/// Exact multivariate division; returns q with q * b == a or throws NotDivisible.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace qm
