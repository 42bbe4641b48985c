#include "qm/cmsystem.hpp"

#include "qm/error.hpp"

namespace qm {

namespace {

Fraction over_alpha(const Rational& numerator, const LinearForm& alpha, std::size_t n) {
  return Fraction(Polynomial::constant(n, numerator), {LinearFormPower{alpha, 1}});
}

// Leading coefficient ratio a / b with a == ratio * b checked; nullopt otherwise.
std::optional<Rational> proportionality(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  const Rational ratio = a.coefficient(b.leading_term().monomial) / b.leading_term().coefficient;
  if (!(a == b * ratio)) return std::nullopt;
  return ratio;
}

}  // namespace

std::string to_string(QuantumIntegral::Construction c) {
  return c == QuantumIntegral::Construction::Berest ? "berest" : "dunkl-restricted";
}

CalogeroMoser::CalogeroMoser(const CoxeterGroup& g, const MultiplicityFunction& m)
    : group_(&g), m_(m), hamiltonian_(g.dim()) {
  const std::size_t n = g.dim();
  const auto& ginv = g.metric_inverse();
  for (const auto& s : g.reflections()) {
    std::vector<Rational> dual(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) dual[i] += ginv(i, k) * s.alpha[k];
    roots_.push_back({s.alpha, s.matrix, std::move(dual), m(s)});
  }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      const Rational c = j == k ? ginv(j, k) : Rational(2 * ginv(j, k));
      if (sgn(c) == 0) continue;
      hamiltonian_.add_term(Fraction(Polynomial::constant(n, c)), Monomial::variable(j) * Monomial::variable(k));
    }
  for (const auto& r : roots_) {
    if (r.m == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(r.dual[i]) != 0)
        hamiltonian_.add_term(over_alpha(-2 * Rational(r.m) * r.dual[i], r.alpha, n), Monomial::variable(i));
  }
  hamiltonian_.canonicalize();
}

Polynomial CalogeroMoser::apply_hamiltonian(const Polynomial& f) const {
  const std::size_t n = nvars();
  const auto& ginv = group_->metric_inverse();
  Polynomial out(n);
  std::vector<Polynomial> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = f.derivative(i);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(ginv(j, k)) != 0) out += first[j].derivative(k) * ginv(j, k);
  for (const auto& r : roots_) {
    if (r.m == 0) continue;
    Polynomial d(n);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(r.dual[i]) != 0) d += first[i] * r.dual[i];
    if (d.is_zero()) continue;
    try {
      out -= exact_divide(d, r.alpha) * Rational(2 * r.m);
    } catch (const NotDivisible&) {
      throw NonPolynomialResult("H f has a pole along " + r.alpha.to_string() + "; the input is not quasiinvariant");
    }
  }
  return out;
}

Polynomial CalogeroMoser::apply_hamiltonian(const Polynomial& f, unsigned power) const {
  Polynomial out = f;
  for (unsigned k = 0; k < power && !out.is_zero(); ++k) out = apply_hamiltonian(out);
  return out;
}

RationalOp CalogeroMoser::dunkl(std::span<const Rational> direction) const {
  const std::size_t n = nvars();
  if (direction.size() != n) throw DimensionMismatch("Dunkl direction has the wrong dimension");
  RationalOp t = RationalOp::directional(direction);
  for (const auto& r : roots_) {
    if (r.m == 0) continue;
    const Rational c = Rational(r.m) * r.alpha(direction);
    if (sgn(c) == 0) continue;
    t.add_term(over_alpha(-c, r.alpha, n), Monomial{});
    t.add_term(over_alpha(c, r.alpha, n), Monomial{}, r.reflection);
  }
  t.canonicalize();
  return t;
}

Polynomial CalogeroMoser::apply_dunkl(std::size_t i, const Polynomial& f) const {
  Polynomial out = f.derivative(i);
  for (const auto& r : roots_) {
    if (r.m == 0 || sgn(r.alpha[i]) == 0) continue;
    const Polynomial diff = f - f.substitute(r.reflection);
    if (diff.is_zero()) continue;
    out -= exact_divide(diff, r.alpha) * (Rational(r.m) * r.alpha[i]);
  }
  return out;
}

Polynomial CalogeroMoser::expected_symbol(const Polynomial& q) const {
  const std::size_t n = nvars();
  return q.substitute(group_->metric_inverse()).embed(2 * n, n);
}

const RationalOp& CalogeroMoser::dunkl_restricted_monomial(const Monomial& beta) const {
  auto it = restricted_cache_.find(beta);
  if (it != restricted_cache_.end()) return it->second;
  const std::size_t n = nvars();
  if (beta.is_one()) return restricted_cache_.emplace(beta, RationalOp::identity(n)).first->second;

  // Res(T_i D) = d_i Res(D) - sum_s m_s alpha_s(e_i) / alpha_s (Res(D) - s Res(D) s^{-1}).
  std::size_t i = 0;
  while (beta[i] == 0) ++i;
  const Monomial rest = beta / Monomial::variable(i);
  const RationalOp d = dunkl_restricted_monomial(rest);
  RationalOp out = RationalOp::derivative(n, Monomial::variable(i)) * d;
  for (const auto& r : roots_) {
    if (r.m == 0 || sgn(r.alpha[i]) == 0) continue;
    RationalOp diff = d - d.conjugate(r.reflection);
    diff.canonicalize();
    if (diff.is_zero()) continue;
    out -= RationalOp::multiplication(over_alpha(Rational(r.m) * r.alpha[i], r.alpha, n)) * diff;
  }
  out.canonicalize();
  return restricted_cache_.emplace(beta, std::move(out)).first->second;
}

QuantumIntegral CalogeroMoser::integral_from_invariant(const Polynomial& p, bool verify) const {
  const std::size_t n = nvars();
  const Polynomial shifted = p.substitute(group_->metric_inverse());
  RationalOp op(n);
  for (const auto& t : shifted.terms()) op += dunkl_restricted_monomial(t.monomial) * t.coefficient;
  op.canonicalize();
  if (verify) {
    const Polynomial symbol = op.principal_symbol();
    const Polynomial expected = expected_symbol(p.homogeneous_component(static_cast<unsigned>(std::max(0, p.degree()))));
    if (!(symbol == expected))
      throw SymbolMismatch("symbol " + symbol.to_string() + " differs from " + expected.to_string());
    const RationalOp c = commutator(op, hamiltonian_);
    if (!c.is_zero()) throw CommutatorNonzero("[L_p, H] = " + c.to_string());
  }
  return {p, std::move(op), QuantumIntegral::Construction::DunklRestricted, Rational(1)};
}

QuantumIntegral CalogeroMoser::integral_berest(const Polynomial& q) const {
  if (!q.is_homogeneous()) throw Error("ad-power formula needs a homogeneous polynomial");
  const unsigned r = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());
  RationalOp op = RationalOp::multiplication(q);
  for (unsigned k = 0; k < r; ++k) op = commutator(hamiltonian_, op);
  const Polynomial symbol = op.principal_symbol();
  if (symbol.is_zero()) throw ZeroSymbol("(ad H)^" + std::to_string(r) + " q has zero symbol");
  const Polynomial expected = expected_symbol(q);
  const auto ratio = proportionality(expected, symbol);
  if (!ratio) throw SymbolMismatch("symbol of (ad H)^r q is not proportional to q(G^{-1} xi)");
  op *= *ratio;
  op.canonicalize();
  return {q, std::move(op), QuantumIntegral::Construction::Berest, *ratio};
}

Rational CalogeroMoser::berest_constant(const Polynomial& q) const {
  const std::size_t n = nvars();
  const unsigned r = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());
  auto it = berest_constants_.find(r);
  if (it != berest_constants_.end()) return it->second;
  // Top symbol of [H, A] is 2 <G^{-1} xi, grad_x> applied to the symbol of A.
  const auto& ginv = group_->metric_inverse();
  Polynomial sigma = q.embed(2 * n, 0);
  for (unsigned k = 0; k < r; ++k) {
    Polynomial next(2 * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(ginv(j, l)) == 0) continue;
        next += (Polynomial::variable(2 * n, n + j) * sigma.derivative(l)) * (2 * ginv(j, l));
      }
    sigma = std::move(next);
  }
  if (sigma.is_zero()) throw ZeroSymbol("top symbol of (ad H)^r q vanishes");
  const auto ratio = proportionality(expected_symbol(q), sigma);
  if (!ratio) throw SymbolMismatch("top symbol of (ad H)^r q is not proportional to q(G^{-1} xi)");
  berest_constants_.emplace(r, *ratio);
  return *ratio;
}

Polynomial CalogeroMoser::berest_apply(const Polynomial& q, const Polynomial& f) const {
  if (q.is_zero()) return Polynomial(nvars());
  const unsigned r = static_cast<unsigned>(q.degree());
  const Rational c = berest_constant(q);
  Polynomial out(nvars());
  Polynomial hk = f;  // H^k f
  for (unsigned k = 0; k <= r && !hk.is_zero(); ++k) {
    Polynomial term = apply_hamiltonian(q * hk, r - k);
    if (!term.is_zero()) {
      Rational coeff = binomial(r, k);
      if (k % 2) coeff = -coeff;
      out += term * coeff;
    }
    hk = apply_hamiltonian(hk);
  }
  return out * c;
}

RationalOp rank1_hamiltonian(const Rational& mu) {
  RationalOp h = RationalOp::derivative(1, Monomial{2});
  if (sgn(mu) != 0) h.add_term(over_alpha(-2 * mu, LinearForm({Rational(1)}), 1), Monomial{1});
  h.canonicalize();
  return h;
}

RationalOp shift_rank1(unsigned m, const Rational& mu) {
  RationalOp s = RationalOp::identity(1);
  const Polynomial x = Polynomial::variable(1, 0);
  for (unsigned i = 0; i < m; ++i) {
    RationalOp factor = RationalOp::multiplication(x) * RationalOp::derivative(1, Monomial{1});
    factor -= RationalOp::identity(1) * Rational(2 * mu + 2 * i + 1);
    s = factor * s;
  }
  s.canonicalize();
  return s;
}

bool verify_intertwiner(unsigned m, const Rational& mu) {
  const RationalOp s = shift_rank1(m, mu);
  return s * rank1_hamiltonian(mu) == rank1_hamiltonian(mu + m) * s;
}

std::vector<Rational> psi_from_shift(unsigned m, unsigned cap) {
  const RationalOp s = shift_rank1(m, 0);
  // S applied to (kx)^j / j! in the x variable; the k^j factor rides along.
  std::vector<Rational> out;
  for (unsigned j = 0; j <= cap; ++j) {
    const Polynomial term = s.apply(Polynomial::monomial(1, Monomial{j}, 1 / factorial(j)));
    out.push_back(term.coefficient(Monomial{j}));
  }
  if (sgn(out[0]) == 0) throw Error("shifted exponential vanishes at the origin");
  const Rational norm = out[0];
  for (auto& v : out) v /= norm;
  return out;
}

std::vector<long> kernel_series_rank1(unsigned m, unsigned cap) {
  const RationalOp s = shift_rank1(m, 0);
  std::vector<long> dims;
  for (unsigned j = 0; j <= cap; ++j) dims.push_back(s.apply(Polynomial::monomial(1, Monomial{j})).is_zero() ? 1 : 0);
  return dims;
}

}  // namespace qm
