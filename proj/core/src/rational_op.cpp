#include "qm/rational_op.hpp"

#include <unordered_map>

#include "qm/error.hpp"
#include "qm/linalg.hpp"

namespace qm {

namespace {

bool is_identity(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

GroupPart normalize_group(Matrix<Rational> m) {
  if (is_identity(m)) return std::nullopt;
  return m;
}

// Caches d^nu g for one coefficient g.
class DerivativeCache {
 public:
  explicit DerivativeCache(Fraction g) { cache_.emplace(Monomial{}, std::move(g)); }

  const Fraction& get(const Monomial& nu) {
    auto it = cache_.find(nu);
    if (it != cache_.end()) return it->second;
    std::size_t i = 0;
    while (nu[i] == 0) ++i;
    Monomial prev = nu;
    prev.set(i, nu[i] - 1);
    Fraction d = get(prev).derivative(i);
    d.reduce();
    return cache_.emplace(nu, std::move(d)).first->second;
  }

 private:
  std::unordered_map<Monomial, Fraction, MonomialHash> cache_;
};

// Enumerates nu <= beta with the multinomial coefficient prod_i C(beta_i, nu_i).
void for_each_submonomial(const Monomial& beta, std::size_t nvars,
                          const std::function<void(const Monomial&, const Rational&)>& fn) {
  Monomial nu;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational coeff) {
    if (i == nvars) {
      fn(nu, coeff);
      return;
    }
    for (unsigned k = 0; k <= beta[i]; ++k) {
      nu.set(i, k);
      rec(i + 1, coeff * binomial(beta[i], k));
    }
    nu.set(i, 0);
  };
  rec(0, Rational(1));
}

std::string derivative_token(const Monomial& beta, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (beta[i] == 0) continue;
    out += "∂" + names[i];
    if (beta[i] > 1) out += "^" + std::to_string(beta[i]);
  }
  return out;
}

std::string matrix_token(const Matrix<Rational>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += to_string(m(i, j));
    }
  }
  return out + "]";
}

}  // namespace

bool OpKeyLess::operator()(const OpKey& a, const OpKey& b) const {
  if (a.derivative != b.derivative) return GrlexGreater{}(a.derivative, b.derivative);
  if (a.group.has_value() != b.group.has_value()) return !a.group.has_value();
  if (!a.group) return false;
  return *a.group < *b.group;
}

std::vector<Term> transport_derivative(const Monomial& gamma, const Matrix<Rational>& w, std::size_t nvars) {
  Polynomial xi_gamma = Polynomial::monomial(nvars, gamma);
  return xi_gamma.substitute(w.transpose()).terms();
}

RationalOp RationalOp::identity(std::size_t nvars) {
  RationalOp op(nvars);
  op.add_term(Fraction(Polynomial::constant(nvars, 1)), Monomial{});
  return op;
}

RationalOp RationalOp::multiplication(const Fraction& f) {
  RationalOp op(f.nvars());
  op.add_term(f, Monomial{});
  return op;
}

RationalOp RationalOp::multiplication(const Polynomial& p) { return multiplication(Fraction(p)); }

RationalOp RationalOp::derivative(std::size_t nvars, const Monomial& beta) {
  RationalOp op(nvars);
  op.add_term(Fraction(Polynomial::constant(nvars, 1)), beta);
  return op;
}

RationalOp RationalOp::directional(std::span<const Rational> v) {
  RationalOp op(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) op.add_term(Fraction(Polynomial::constant(v.size(), v[i])), Monomial::variable(i));
  return op;
}

RationalOp RationalOp::group_element(const Matrix<Rational>& w) {
  RationalOp op(w.rows());
  op.add_term(Fraction(Polynomial::constant(w.rows(), 1)), Monomial{}, normalize_group(w));
  return op;
}

bool RationalOp::has_group_part() const {
  for (const auto& [key, f] : terms_)
    if (key.group) return true;
  return false;
}

int RationalOp::order() const {
  int best = -1;
  for (const auto& [key, f] : terms_)
    if (!f.is_zero()) best = std::max(best, static_cast<int>(key.derivative.degree()));
  return best;
}

void RationalOp::add_term(const Fraction& coefficient, const Monomial& beta, const GroupPart& group) {
  if (coefficient.is_zero()) return;
  GroupPart g = group ? normalize_group(*group) : std::nullopt;
  auto [it, inserted] = terms_.try_emplace(OpKey{beta, std::move(g)}, coefficient);
  if (!inserted) it->second += coefficient;
}

RationalOp& RationalOp::operator+=(const RationalOp& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [key, f] : other.terms_) add_term(f, key.derivative, key.group);
  return *this;
}

RationalOp& RationalOp::operator-=(const RationalOp& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [key, f] : other.terms_) add_term(-f, key.derivative, key.group);
  return *this;
}

RationalOp& RationalOp::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, f] : terms_) f *= scalar;
  return *this;
}

RationalOp operator*(const RationalOp& a, const RationalOp& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  RationalOp result(n);
  if (a.is_zero() || b.is_zero()) return result;

  // Moves the group part of an A-term across a B-term:
  // w (g d^gamma v) = (w.g) (w d^gamma w^-1) w v.
  struct Moved {
    std::vector<Term> derivatives;  // (delta, c_delta)
    GroupPart group;
    DerivativeCache coefficient;
  };
  std::map<GroupPart, std::vector<Moved>> moved_by_group;
  auto moved_for = [&](const GroupPart& w) -> std::vector<Moved>& {
    auto it = moved_by_group.find(w);
    if (it != moved_by_group.end()) return it->second;
    std::vector<Moved> moved;
    moved.reserve(b.terms_.size());
    Matrix<Rational> w_inv;
    if (w) w_inv = inverse(*w);
    for (const auto& [key, g] : b.terms_) {
      if (!w) {
        moved.push_back(Moved{{Term{key.derivative, Rational(1)}}, key.group, DerivativeCache(g)});
        continue;
      }
      Fraction moved_g = g.substitute(w_inv);
      const Matrix<Rational> v = key.group ? *key.group : Matrix<Rational>::identity(n);
      moved.push_back(Moved{transport_derivative(key.derivative, *w, n), normalize_group(*w * v),
                            DerivativeCache(std::move(moved_g))});
    }
    return moved_by_group.emplace(w, std::move(moved)).first->second;
  };

  for (const auto& [ka, fa] : a.terms_) {
    auto& moved = moved_for(ka.group);
    for (auto& mb : moved) {
      for_each_submonomial(ka.derivative, n, [&](const Monomial& nu, const Rational& binom) {
        const Fraction& dg = mb.coefficient.get(nu);
        if (dg.is_zero()) return;
        Fraction coeff = fa * dg;
        coeff *= binom;
        const Monomial rest = ka.derivative / nu;
        for (const auto& [delta, c] : mb.derivatives) {
          Fraction term = coeff;
          term *= c;
          result.add_term(term, rest * delta, mb.group);
        }
      });
    }
  }
  result.canonicalize();
  return result;
}

Polynomial RationalOp::apply(const Polynomial& f) const {
  Fraction total(nvars_);
  for (const auto& [key, coeff] : terms_) {
    Polynomial g = key.group ? f.substitute(inverse(*key.group)) : f;
    g = g.derivative(key.derivative);
    if (g.is_zero()) continue;
    Fraction t = coeff;
    t *= g;
    total += t;
  }
  return total.to_polynomial();
}

RationalOp RationalOp::restrict_to_invariants() const {
  RationalOp r(nvars_);
  for (const auto& [key, f] : terms_) r.add_term(f, key.derivative);
  r.canonicalize();
  return r;
}

RationalOp RationalOp::conjugate(const Matrix<Rational>& w) const {
  const Matrix<Rational> w_inv = inverse(w);
  RationalOp r(nvars_);
  for (const auto& [key, f] : terms_) {
    Fraction g = f.substitute(w_inv);
    GroupPart group;
    if (key.group) group = normalize_group(w * *key.group * w_inv);
    for (const auto& [delta, c] : transport_derivative(key.derivative, w, nvars_)) {
      Fraction t = g;
      t *= c;
      r.add_term(t, delta, group);
    }
  }
  r.canonicalize();
  return r;
}

Polynomial RationalOp::principal_symbol() const {
  const int k = order();
  const std::size_t n2 = 2 * nvars_;
  if (n2 > kMaxVariables) throw Error("too many variables for a symbol");
  Polynomial symbol(n2);
  if (k < 0) return symbol;
  for (const auto& [key, f] : terms_) {
    if (static_cast<int>(key.derivative.degree()) != k) continue;
    if (key.group) throw SymbolNotPolynomial("principal symbol of an operator with group parts");
    Fraction reduced = f;
    reduced.reduce();
    if (reduced.has_denominator())
      throw SymbolNotPolynomial("top-order coefficient " + reduced.to_string() + " is not polynomial");
    Monomial xi;
    for (std::size_t i = 0; i < nvars_; ++i) xi.set(nvars_ + i, key.derivative[i]);
    symbol += reduced.numerator().embed(n2, 0) * Polynomial::monomial(n2, xi);
  }
  return symbol;
}

bool RationalOp::is_homogeneous_of_degree(int k) const {
  for (const auto& [key, f] : terms_) {
    if (f.is_zero()) continue;
    if (!f.numerator().is_homogeneous()) return false;
    if (f.degree() != static_cast<int>(key.derivative.degree()) + k) return false;
  }
  return true;
}

RationalOp& RationalOp::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.reduce();
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

std::string RationalOp::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  const auto vars = names.empty() ? default_variable_names(nvars_) : names;
  std::string out;
  for (const auto& [key, f] : terms_) {
    if (!out.empty()) out += " + ";
    Fraction reduced = f;
    reduced.reduce();
    out += "(" + reduced.to_string(vars) + ")";
    const std::string d = derivative_token(key.derivative, vars);
    if (!d.empty()) out += "*" + d;
    if (key.group) out += "*w" + matrix_token(*key.group);
  }
  return out;
}

bool operator==(const RationalOp& a, const RationalOp& b) {
  RationalOp diff = a;
  diff -= b;
  diff.canonicalize();
  return diff.is_zero();
}

RationalOp commutator(const RationalOp& a, const RationalOp& b) {
  RationalOp r = a * b;
  r -= b * a;
  r.canonicalize();
  return r;
}

}  // namespace qm
