#include "qm/series.hpp"

#include <algorithm>

#include "qm/error.hpp"

namespace qm {

UniPoly trim(UniPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

UniPoly multiply(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return trim(std::move(c));
}

UniPoly subtract(const UniPoly& a, const UniPoly& b) {
  UniPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return trim(std::move(c));
}

UniPoly one_minus_t_power(unsigned d) {
  if (d == 0) return {};
  UniPoly p(d + 1, Rational(0));
  p[0] = 1;
  p[d] = -1;
  return p;
}

UniPoly reverse(const UniPoly& p) {
  UniPoly r = trim(p);
  std::reverse(r.begin(), r.end());
  return r;
}

int valuation(const UniPoly& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (sgn(p[k]) != 0) return static_cast<int>(k);
  return -1;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    Rational c = p[k];
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = c == 1;
    if (k == 0 || !unit) out += qm::to_string(c);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Rational> RationalSeries::taylor(std::size_t count) const {
  if (denominator.empty() || sgn(denominator[0]) == 0) throw Error("series denominator vanishes at t = 0");
  std::vector<Rational> out(count, Rational(0));
  for (std::size_t k = 0; k < count; ++k) {
    Rational v = k < numerator.size() ? numerator[k] : Rational(0);
    for (std::size_t i = 1; i < denominator.size() && i <= k; ++i) v -= denominator[i] * out[k - i];
    out[k] = v / denominator[0];
  }
  return out;
}

std::string RationalSeries::to_string() const {
  return "(" + qm::to_string(numerator) + ")/(" + qm::to_string(denominator) + ")";
}

StanleyResult stanley_check(const RationalSeries& h, unsigned n) {
  const UniPoly num = trim(h.numerator);
  const UniPoly den = trim(h.denominator);
  if (num.empty()) return {true, 0};
  // h(1/t) = t^{deg D - deg N} Nrev / Drev, so the identity reads
  // N Drev = (-1)^n t^{l'} Nrev D with l' = l + deg D - deg N.
  const UniPoly a = multiply(num, reverse(den));
  const UniPoly b = multiply(reverse(num), den);
  const int shift_prime = valuation(a) - valuation(b);
  UniPoly lhs(static_cast<std::size_t>(std::max(0, -shift_prime)), Rational(0));
  lhs.insert(lhs.end(), a.begin(), a.end());
  UniPoly rhs(static_cast<std::size_t>(std::max(0, shift_prime)), Rational(0));
  for (const auto& c : b) rhs.push_back(n % 2 ? Rational(-c) : c);
  StanleyResult r;
  r.holds = trim(lhs) == trim(rhs);
  r.shift = shift_prime - static_cast<int>(den.size() - 1) + static_cast<int>(num.size() - 1);
  return r;
}

bool PoincareData::closed_form_matches() const {
  if (!closed_form) return true;
  const auto t = closed_form->taylor(coefficients.size());
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (t[k] != coefficients[k]) return false;
  return true;
}

bool PoincareData::nonnegative() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](long c) { return c >= 0; });
}

std::optional<RationalSeries> fit_closed_form(const std::vector<long>& coefficients, unsigned n, unsigned margin) {
  UniPoly p;
  for (long c : coefficients) p.push_back(Rational(c));
  UniPoly den{Rational(1)};
  for (unsigned i = 0; i < n; ++i) den = multiply(den, one_minus_t_power(1));
  UniPoly num = multiply(p, den);
  num.resize(coefficients.size(), Rational(0));
  if (num.size() < margin) return std::nullopt;
  for (std::size_t k = num.size() - margin; k < num.size(); ++k)
    if (sgn(num[k]) != 0) return std::nullopt;
  return RationalSeries{trim(std::move(num)), den};
}

}  // namespace qm
