#include "qm/fraction.hpp"

#include "qm/error.hpp"

namespace qm {

namespace {

Polynomial form_power(const LinearForm& l, unsigned e) { return l.to_polynomial().pow(e); }

}  // namespace

Fraction::Fraction(Polynomial numerator, const std::vector<LinearFormPower>& denominator)
    : numerator_(std::move(numerator)) {
  for (const auto& [form, exponent] : denominator) {
    if (exponent == 0) continue;
    const Rational s = form.scale_to_primitive();
    Rational factor;
    mpz_pow_ui(factor.get_num_mpz_t(), s.get_den_mpz_t(), exponent);
    mpz_pow_ui(factor.get_den_mpz_t(), s.get_num_mpz_t(), exponent);
    factor.canonicalize();
    numerator_ *= factor;
    denominator_[form.primitive()] += exponent;
  }
}

Fraction Fraction::inverse_power(const LinearForm& l, unsigned exponent) {
  return Fraction(Polynomial::constant(l.nvars(), 1), {LinearFormPower{l, exponent}});
}

unsigned Fraction::denominator_degree() const {
  unsigned d = 0;
  for (const auto& [form, e] : denominator_) d += e;
  return d;
}

int Fraction::degree() const {
  if (numerator_.is_zero()) return 0;
  return numerator_.degree() - static_cast<int>(denominator_degree());
}

void Fraction::bring_to(const Denominator& target) {
  Polynomial factor = Polynomial::constant(numerator_.nvars(), 1);
  bool changed = false;
  for (const auto& [form, e] : target) {
    auto it = denominator_.find(form);
    const unsigned have = it == denominator_.end() ? 0 : it->second;
    if (e > have) {
      factor *= form_power(form, e - have);
      changed = true;
    }
  }
  if (changed) numerator_ *= factor;
  denominator_ = target;
}

Fraction& Fraction::operator+=(const Fraction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  if (denominator_ == other.denominator_) {
    numerator_ += other.numerator_;
    return *this;
  }
  Denominator common = denominator_;
  for (const auto& [form, e] : other.denominator_) {
    auto& slot = common[form];
    if (e > slot) slot = e;
  }
  bring_to(common);
  Fraction o = other;
  o.bring_to(common);
  numerator_ += o.numerator_;
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& other) { return *this += -other; }

Fraction& Fraction::operator*=(const Fraction& other) {
  numerator_ *= other.numerator_;
  if (numerator_.is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (const auto& [form, e] : other.denominator_) denominator_[form] += e;
  return *this;
}

Fraction& Fraction::operator*=(const Polynomial& p) {
  numerator_ *= p;
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

Fraction& Fraction::operator*=(const Rational& s) {
  numerator_ *= s;
  if (numerator_.is_zero()) denominator_.clear();
  return *this;
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.numerator_ = -r.numerator_;
  return r;
}

Fraction Fraction::derivative(std::size_t index) const {
  const std::size_t n = numerator_.nvars();
  // d(N/D) = (dN * L - N * sum_k e_k c_k L/l_k) / (D * L), L = product of the forms involving x_index.
  std::vector<const std::pair<const LinearForm, unsigned>*> involved;
  for (const auto& entry : denominator_)
    if (sgn(entry.first[index]) != 0) involved.push_back(&entry);
  Fraction result(n);
  if (involved.empty()) {
    result.numerator_ = numerator_.derivative(index);
    if (!result.numerator_.is_zero()) result.denominator_ = denominator_;
    return result;
  }
  Polynomial big_l = Polynomial::constant(n, 1);
  for (auto* entry : involved) big_l *= entry->first.to_polynomial();
  Polynomial num = numerator_.derivative(index) * big_l;
  for (std::size_t k = 0; k < involved.size(); ++k) {
    Polynomial others = Polynomial::constant(n, 1);
    for (std::size_t j = 0; j < involved.size(); ++j)
      if (j != k) others *= involved[j]->first.to_polynomial();
    num -= numerator_ * others * (involved[k]->first[index] * involved[k]->second);
  }
  result.numerator_ = std::move(num);
  if (result.numerator_.is_zero()) return result;
  result.denominator_ = denominator_;
  for (auto* entry : involved) result.denominator_[entry->first] += 1;
  return result;
}

Fraction Fraction::substitute(const Matrix<Rational>& m) const {
  std::vector<LinearFormPower> den;
  den.reserve(denominator_.size());
  for (const auto& [form, e] : denominator_) den.push_back(LinearFormPower{form.compose(m), e});
  return Fraction(numerator_.substitute(m), den);
}

Fraction& Fraction::reduce() {
  if (numerator_.is_zero()) {
    denominator_.clear();
    return *this;
  }
  for (auto it = denominator_.begin(); it != denominator_.end();) {
    Polynomial q;
    while (it->second > 0 && try_divide(numerator_, it->first, q)) {
      numerator_ = std::move(q);
      --it->second;
    }
    if (it->second == 0)
      it = denominator_.erase(it);
    else
      ++it;
  }
  return *this;
}

Polynomial Fraction::to_polynomial() const {
  Fraction r = *this;
  r.reduce();
  if (r.has_denominator())
    throw NonPolynomialResult("rational function " + r.to_string() + " is not a polynomial");
  return r.numerator_;
}

std::string Fraction::to_string(const std::vector<std::string>& names) const {
  std::string num = numerator_.to_string(names);
  if (denominator_.empty()) return num;
  if (numerator_.size() > 1) num = "(" + num + ")";
  std::string den;
  std::size_t factors = 0;
  for (const auto& [form, e] : denominator_) {
    if (!den.empty()) den += "*";
    std::size_t nonzero = 0;
    for (const auto& c : form.coefficients()) nonzero += sgn(c) != 0;
    const std::string f = form.to_string(names);
    den += nonzero > 1 ? "(" + f + ")" : f;
    if (e > 1) den += "^" + std::to_string(e);
    factors += e > 1 ? 2 : 1;
  }
  return num + "/" + (factors > 1 ? "(" + den + ")" : den);
}

}  // namespace qm
