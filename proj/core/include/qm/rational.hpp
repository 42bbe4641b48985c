#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace qm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q" and terminating decimals such as "0.5".
Rational parse_rational(std::string_view text);

Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace qm
