#include "qm/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace qm {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back(Term{m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrlexGreater{}(a.monomial, b.monomial); });
  return terms;
}

void check_nvars(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("polynomials live in different rings");
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars_ > kMaxVariables) throw Error("too many variables");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return GrlexGreater{}(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coefficient) == 0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& value) {
  Polynomial p(nvars);
  if (sgn(value) != 0) p.terms_.push_back(Term{Monomial{}, value});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back(Term{Monomial::variable(index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coefficients) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (sgn(coefficients[i]) != 0) terms.push_back(Term{Monomial::variable(i), coefficients[i]});
  return Polynomial(coefficients.size(), std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return terms_.back().monomial.degree() == d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return GrlexGreater{}(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    nvars_ = std::max(nvars_, other.nvars_);
    terms_ = other.terms_;
    return *this;
  }
  check_nvars(nvars_, other.nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  GrlexGreater greater;
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->monomial == b->monomial) {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) out.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    } else if (greater(a->monomial, b->monomial)) {
      out.push_back(std::move(*a++));
    } else {
      out.push_back(*b++);
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(std::max(a.nvars_, b.nvars_));
  check_nvars(a.nvars_, b.nvars_);
  if (a.terms_.size() == 1) return b.multiply_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.terms_.size() == 1) return a.multiply_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
      acc[ta.monomial * tb.monomial] += prod;
    }
  Polynomial r(a.nvars_);
  r.terms_ = drain(acc);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves grlex order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    out.push_back(Term{m, t.coefficient * e});
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::derivative(const Monomial& beta) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!beta.divides(t.monomial)) continue;
    Integer factor = 1;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < beta[i]; ++k) factor *= t.monomial[i] - k;
    out.push_back(Term{t.monomial / beta, t.coefficient * factor});
  }
  return Polynomial(nvars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const Matrix<Rational>& m) const {
  if (m.rows() != nvars_) throw DimensionMismatch("substitution matrix has wrong row count");
  const std::size_t out_vars = m.cols();
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::vector<Rational> row(out_vars);
    for (std::size_t j = 0; j < out_vars; ++j) row[j] = m(i, j);
    powers[i].push_back(constant(out_vars, 1));
    powers[i].push_back(linear(row));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  Accumulator acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(out_vars, t.coefficient);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i]) prod = prod * power(i, t.monomial[i]);
    for (const auto& pt : prod.terms_) acc[pt.monomial] += pt.coefficient;
  }
  Polynomial r(out_vars);
  r.terms_ = drain(acc);
  return r;
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw DimensionMismatch("embedding does not fit");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < nvars_; ++i) m.set(offset + i, t.monomial[i]);
    out.push_back(Term{m, t.coefficient});
  }
  return Polynomial(nvars, std::move(out));
}

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  if (nvars == 1) {
    names.push_back(stem);
    return names;
  }
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  const auto vars = names.empty() ? default_variable_names(nvars_) : names;
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += qm::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += qm::to_string(c) + "*" + mono;
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  check_nvars(a.nvars(), b.nvars());
  const Term& lead = b.leading_term();
  Polynomial remainder = a;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& t = remainder.leading_term();
    if (!lead.monomial.divides(t.monomial))
      throw NotDivisible("polynomial is not divisible", remainder);
    Monomial qm = t.monomial / lead.monomial;
    Rational qc = t.coefficient / lead.coefficient;
    remainder -= b.multiply_monomial(qm, qc);
    quotient.push_back(Term{qm, std::move(qc)});
  }
  return Polynomial(a.nvars(), std::move(quotient));
}

}  // namespace qm
