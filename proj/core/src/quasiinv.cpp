#include "qm/quasiinv.hpp"

#include <sstream>
#include <unordered_map>

#include "qm/error.hpp"
#include "qm/linalg.hpp"

namespace qm {

namespace {

Matrix<Rational> orthogonal_reflection(const LinearForm& alpha) {
  const std::size_t n = alpha.nvars();
  Rational len = 0;
  for (const auto& c : alpha.coefficients()) len += c * c;
  Matrix<Rational> s = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= 2 * alpha[i] * alpha[j] / len;
  return s;
}

// x = A z with z_p = alpha(x) and z_k = x_k otherwise.
Matrix<Rational> adapted_coordinates(const LinearForm& alpha) {
  const std::size_t n = alpha.nvars();
  const std::size_t p = alpha.pivot();
  Matrix<Rational> a = Matrix<Rational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) a(p, k) = k == p ? Rational(1 / alpha[p]) : Rational(-alpha[k] / alpha[p]);
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

Arrangement::Arrangement(std::vector<LinearForm> covectors, std::vector<unsigned> multiplicities) {
  if (covectors.size() != multiplicities.size())
    throw DimensionMismatch("arrangement needs one multiplicity per hyperplane");
  if (covectors.empty()) throw Error("arrangement without hyperplanes");
  dim_ = covectors.front().nvars();
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    if (covectors[i].nvars() != dim_) throw DimensionMismatch("arrangement covectors of different dimensions");
    for (std::size_t k = 0; k < i; ++k)
      if (covectors[k].primitive() == covectors[i].primitive())
        throw Error("proportional covectors in arrangement: " + covectors[i].to_string());
    hyperplanes_.push_back({covectors[i], orthogonal_reflection(covectors[i]), multiplicities[i]});
  }
}

Arrangement Arrangement::parse(const std::string& text) {
  std::vector<LinearForm> forms;
  std::vector<unsigned> mult;
  for (const auto& item : split(text, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw ParseError("arrangement entry needs 'covector : multiplicity': " + item);
    std::vector<Rational> c;
    std::istringstream in(parts[0]);
    std::string tok;
    while (in >> tok) c.push_back(parse_rational(tok));
    std::istringstream min(parts[1]);
    long m = -1;
    if (!(min >> m) || m < 0) throw ParseError("bad multiplicity in arrangement entry: " + item);
    forms.emplace_back(std::move(c));
    mult.push_back(static_cast<unsigned>(m));
  }
  return Arrangement(std::move(forms), std::move(mult));
}

std::string Arrangement::to_string() const {
  std::string out;
  for (const auto& h : hyperplanes_) {
    if (!out.empty()) out += " ; ";
    for (std::size_t i = 0; i < h.alpha.nvars(); ++i) out += (i ? " " : "") + qm::to_string(h.alpha[i]);
    out += " : " + std::to_string(h.multiplicity);
  }
  return out;
}

std::vector<HyperplaneCondition> conditions(const CoxeterGroup& g, const MultiplicityFunction& m) {
  std::vector<HyperplaneCondition> conds;
  for (const auto& s : g.reflections()) conds.push_back({s.alpha, s.matrix, m(s)});
  return conds;
}

QuasiinvarianceResult is_quasiinvariant(const Polynomial& q, const std::vector<HyperplaneCondition>& conds) {
  QuasiinvarianceResult result;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    const auto& c = conds[i];
    Polynomial rest = q - q.substitute(c.reflection);
    const unsigned order = 2 * c.multiplicity + 1;
    for (unsigned k = 0; k < order; ++k) {
      try {
        rest = exact_divide(rest, c.alpha);
      } catch (const NotDivisible& e) {
        result.holds = false;
        result.failing_reflection = i;
        result.divided = k;
        result.remainder = e.remainder();
        return result;
      }
    }
  }
  return result;
}

QuasiinvarianceResult is_quasiinvariant(const Polynomial& q, const CoxeterGroup& g, const MultiplicityFunction& m) {
  if (q.nvars() != g.dim()) throw DimensionMismatch("polynomial dimension differs from the group");
  return is_quasiinvariant(q, conditions(g, m));
}

EchelonSpan qm_slice(std::size_t nvars, const std::vector<HyperplaneCondition>& conds, unsigned j) {
  const auto monos = monomials_of_degree(nvars, j);
  std::vector<Polynomial> gens;

  // Rows are keyed by (condition, monomial in adapted coordinates).
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& c : conds) {
    if (c.multiplicity == 0) continue;  // q - s q always vanishes on the hyperplane
    const std::size_t p = c.alpha.pivot();
    const unsigned order = 2 * c.multiplicity + 1;
    const Matrix<Rational> a = adapted_coordinates(c.alpha);
    const Matrix<Rational> sa = c.reflection * a;
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    const std::size_t base = rows.size();
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const Polynomial mono = Polynomial::monomial(nvars, monos[i]);
      const Polynomial h = mono.substitute(a) - mono.substitute(sa);
      for (const auto& t : h.terms()) {
        if (t.monomial[p] >= order) continue;
        auto [it, inserted] = row_of.try_emplace(t.monomial, base + row_of.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(i, t.coefficient);
      }
    }
  }

  if (rows.empty()) {
    for (const auto& mono : monos) gens.push_back(Polynomial::monomial(nvars, mono));
    return EchelonSpan::of(nvars, gens);
  }
  RatMatrix system(rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, v] : rows[r]) system(r, col) = v;
  for (const auto& v : nullspace(system)) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (sgn(v[i]) != 0) terms.push_back({monos[i], v[i]});
    gens.emplace_back(nvars, std::move(terms));
  }
  return EchelonSpan::of(nvars, gens);
}

EchelonSpan qm_slice(const CoxeterGroup& g, const MultiplicityFunction& m, unsigned j) {
  return qm_slice(g.dim(), conditions(g, m), j);
}

QuasiinvariantRing::QuasiinvariantRing(const CoxeterGroup& g, const MultiplicityFunction& m)
    : nvars_(g.dim()), conds_(qm::conditions(g, m)) {}

QuasiinvariantRing::QuasiinvariantRing(const Arrangement& a) : nvars_(a.dim()), conds_(a.hyperplanes()) {}

const EchelonSpan& QuasiinvariantRing::slice(unsigned j) const {
  auto it = slices_.find(j);
  if (it != slices_.end()) return it->second;
  return slices_.emplace(j, qm_slice(nvars_, conds_, j)).first->second;
}

std::vector<long> QuasiinvariantRing::dimensions(unsigned cap) const {
  std::vector<long> dims;
  for (unsigned j = 0; j <= cap; ++j) dims.push_back(static_cast<long>(slice(j).dim()));
  return dims;
}

PoincareData QuasiinvariantRing::poincare(unsigned cap) const {
  PoincareData data;
  data.coefficients = dimensions(cap);
  data.closed_form = fit_closed_form(data.coefficients, static_cast<unsigned>(nvars_));
  return data;
}

}  // namespace qm
