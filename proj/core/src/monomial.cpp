#include "qm/monomial.hpp"

#include <numeric>

#include "qm/error.hpp"

namespace qm {

namespace {

std::uint8_t checked_exponent(unsigned e) {
  if (e > 255) throw Error("monomial exponent overflow (> 255)");
  return static_cast<std::uint8_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw Error("too many variables for a monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) exponents_[i] = checked_exponent(exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) throw Error("variable index out of range");
  exponents_[index] = checked_exponent(exponent);
}

unsigned Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

bool Monomial::is_one() const {
  for (auto e : exponents_)
    if (e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exponents_[i] = checked_exponent(unsigned(exponents_[i]) + other.exponents_[i]);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (other.exponents_[i] > exponents_[i]) throw Error("monomial division with negative exponent");
    r.exponents_[i] = static_cast<std::uint8_t>(exponents_[i] - other.exponents_[i]);
  }
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.raw() > b.raw();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the packed exponents.
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.raw()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void enumerate(std::size_t nvars, std::size_t index, unsigned remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (index + 1 == nvars) {
    current.set(index, remaining);
    out.push_back(current);
    current.set(index, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(index, e);
    enumerate(nvars, index + 1, remaining - e, current, out);
  }
  current.set(index, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial current;
  enumerate(nvars, 0, degree, current, out);
  return out;
}

}  // namespace qm
