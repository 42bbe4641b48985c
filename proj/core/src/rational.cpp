#include "qm/rational.hpp"

#include <algorithm>
#include <cctype>

#include "qm/error.hpp"

namespace qm {

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");
  const auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw ParseError("mixed decimal/fraction: " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t scale = s.size() - dot - 1;
      Rational r(Integer(digits.empty() || digits == "-" ? "0" : digits), 1);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      r /= den;
      r.canonicalize();
      return r;
    }
    Rational r(s, 10);
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational literal: " + s);
  }
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

}  // namespace qm
