#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qm/fraction.hpp"
#include "qm/matrix.hpp"
#include "qm/monomial.hpp"
#include "qm/polynomial.hpp"

namespace qm {

/// Group part of an operator term; nullopt stands for the identity element.
using GroupPart = std::optional<Matrix<Rational>>;

struct OpKey {
  Monomial derivative;
  GroupPart group;
};

/// Terms are ordered by derivative (descending grlex), then group part.
struct OpKeyLess {
  bool operator()(const OpKey& a, const OpKey& b) const;
};

/// Differential operator sum_k f_k(x) d^{beta_k} w_k, normal ordered: the
/// coefficient stands left of the derivative, which stands left of the group
/// element. Coefficients are Fractions over products of linear forms.
class RationalOp {
 public:
  using TermMap = std::map<OpKey, Fraction, OpKeyLess>;

  explicit RationalOp(std::size_t nvars = 0) : nvars_(nvars) {}

  static RationalOp identity(std::size_t nvars);
  static RationalOp multiplication(const Fraction& f);
  static RationalOp multiplication(const Polynomial& p);
  /// d^beta
  static RationalOp derivative(std::size_t nvars, const Monomial& beta);
  /// d_v = sum_i v_i d_i
  static RationalOp directional(std::span<const Rational> v);
  static RationalOp group_element(const Matrix<Rational>& w);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_group_part() const;
  /// Highest |beta| among the terms; -1 for the zero operator.
  int order() const;

  void add_term(const Fraction& coefficient, const Monomial& beta, const GroupPart& group = std::nullopt);

  RationalOp& operator+=(const RationalOp& other);
  RationalOp& operator-=(const RationalOp& other);
  RationalOp& operator*=(const Rational& scalar);
  friend RationalOp operator+(RationalOp a, const RationalOp& b) { return a += b; }
  friend RationalOp operator-(RationalOp a, const RationalOp& b) { return a -= b; }
  friend RationalOp operator*(RationalOp a, const Rational& s) { return a *= s; }
  friend RationalOp operator*(const Rational& s, RationalOp a) { return a *= s; }
  /// Normal-ordered composition (this after other).
  friend RationalOp operator*(const RationalOp& a, const RationalOp& b);

  /// Applies to a polynomial; throws NonPolynomialResult when poles survive.
  Polynomial apply(const Polynomial& f) const;

  /// Drops every group part: f d^beta w -> f d^beta.
  RationalOp restrict_to_invariants() const;
  /// w o L o w^{-1}.
  RationalOp conjugate(const Matrix<Rational>& w) const;

  /// Top-order part with d^beta -> xi^beta, as a polynomial in (x_1..x_n, xi_1..xi_n).
  Polynomial principal_symbol() const;
  /// True when every coefficient of d^beta is homogeneous of degree |beta| + k.
  bool is_homogeneous_of_degree(int k) const;

  /// Cancels linear factors in every coefficient and drops vanishing terms.
  RationalOp& canonicalize();

  /// Canonical text such as "(1)*∂x1^2 + (-2/x1)*∂x1"; group parts print as "*w[...]".
  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Mathematical equality (compares canonical forms).
  friend bool operator==(const RationalOp& a, const RationalOp& b);

 private:
  std::size_t nvars_;
  TermMap terms_;
};

RationalOp commutator(const RationalOp& a, const RationalOp& b);

/// Expands w d^gamma as sum_delta c_delta d^delta w, i.e. the polynomial xi^gamma
/// with xi -> W^T xi. Returned as (delta, c_delta) pairs.
std::vector<Term> transport_derivative(const Monomial& gamma, const Matrix<Rational>& w, std::size_t nvars);

}  // namespace qm
