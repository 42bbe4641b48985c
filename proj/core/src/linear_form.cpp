#include "qm/linear_form.hpp"

#include <algorithm>
#include <map>

#include "qm/error.hpp"

namespace qm {

LinearForm::LinearForm(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (std::all_of(coefficients_.begin(), coefficients_.end(),
                  [](const Rational& c) { return sgn(c) == 0; }))
    throw Error("linear form must be nonzero");
}

Rational LinearForm::operator()(std::span<const Rational> v) const {
  if (v.size() != coefficients_.size()) throw DimensionMismatch("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += coefficients_[i] * v[i];
  return s;
}

Polynomial LinearForm::to_polynomial() const { return Polynomial::linear(coefficients_); }

std::size_t LinearForm::pivot() const {
  std::size_t best = 0;
  Rational best_abs = 0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    Rational a = abs(coefficients_[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

Rational LinearForm::scale_to_primitive() const {
  Integer den_lcm = 1;
  for (const auto& c : coefficients_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coefficients_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  for (const auto& c : coefficients_)
    if (sgn(c) != 0) {
      if (sgn(c) < 0) scale = -scale;
      break;
    }
  return scale;
}

LinearForm LinearForm::primitive() const {
  const Rational s = scale_to_primitive();
  std::vector<Rational> c = coefficients_;
  for (auto& v : c) v /= s;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::compose(const Matrix<Rational>& m) const {
  if (m.rows() != coefficients_.size()) throw DimensionMismatch("compose: shape mismatch");
  std::vector<Rational> c(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) c[j] += coefficients_[i] * m(i, j);
  return LinearForm(std::move(c));
}

std::string LinearForm::to_string(const std::vector<std::string>& names) const {
  return to_polynomial().to_string(names);
}

namespace {

// Splits p by powers of x_k: slices[e] holds the terms with x_k-exponent e, x_k removed.
std::vector<Polynomial> split_by_variable(const Polynomial& p, std::size_t k) {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    const unsigned e = m[k];
    m.set(k, 0);
    buckets[e].push_back(Term{m, t.coefficient});
  }
  const unsigned top = buckets.empty() ? 0 : buckets.rbegin()->first;
  std::vector<Polynomial> slices(top + 1, Polynomial(p.nvars()));
  for (auto& [e, terms] : buckets) slices[e] = Polynomial(p.nvars(), std::move(terms));
  return slices;
}

// Divides by l = c * x_k + rest. With p = sum_e a_e x_k^e and q = sum_e b_e x_k^e,
// a_e = c b_{e-1} + rest b_e determines b top-down; a_0 - rest b_0 is the remainder.
bool divide_impl(const Polynomial& p, const LinearForm& l, Polynomial& quotient,
                 Polynomial* remainder) {
  if (l.nvars() != p.nvars()) throw DimensionMismatch("linear form and polynomial dimensions differ");
  const std::size_t n = p.nvars();
  if (p.is_zero()) {
    quotient = Polynomial(n);
    if (remainder) *remainder = Polynomial(n);
    return true;
  }
  const std::size_t k = l.pivot();
  const Rational inv_c = 1 / l[k];
  std::vector<Rational> rest_coeffs = l.coefficients();
  rest_coeffs[k] = 0;
  const Polynomial rest = Polynomial::linear(rest_coeffs);

  std::vector<Polynomial> a = split_by_variable(p, k);
  const std::size_t top = a.size() - 1;
  std::vector<Polynomial> b(top, Polynomial(n));
  for (std::size_t e = top; e >= 1; --e) {
    Polynomial current = a[e];
    if (e < top) current -= rest * b[e];
    b[e - 1] = current * inv_c;
  }
  Polynomial r = a[0];
  if (top >= 1) r -= rest * b[0];
  if (remainder) *remainder = r;
  if (!r.is_zero()) return false;

  std::vector<Term> terms;
  for (std::size_t e = 0; e < b.size(); ++e)
    for (const auto& t : b[e].terms()) {
      Monomial m = t.monomial;
      m.set(k, e);
      terms.push_back(Term{m, t.coefficient});
    }
  quotient = Polynomial(n, std::move(terms));
  return true;
}

}  // namespace

Polynomial exact_divide(const Polynomial& p, const LinearForm& l) {
  Polynomial q(p.nvars());
  Polynomial r(p.nvars());
  if (!divide_impl(p, l, q, &r))
    throw NotDivisible("not divisible by " + l.to_string(), std::move(r));
  return q;
}

bool try_divide(const Polynomial& p, const LinearForm& l, Polynomial& quotient) {
  return divide_impl(p, l, quotient, nullptr);
}

}  // namespace qm
