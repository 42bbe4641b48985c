#include "qm/harmonics.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <unordered_map>

#include "qm/error.hpp"

namespace qm {

namespace {

// Linear combinations of `basis` that `images` sends to zero; `images` returns
// one or more polynomials per input.
std::vector<Polynomial> kernel(const std::vector<Polynomial>& basis,
                               const std::function<std::vector<Polynomial>(const Polynomial&)>& images) {
  if (basis.empty()) return {};
  const std::size_t n = basis.front().nvars();
  std::vector<std::vector<Polynomial>> imgs;
  for (const auto& b : basis) imgs.push_back(images(b));
  std::map<std::pair<std::size_t, Monomial>, std::size_t,
           std::function<bool(const std::pair<std::size_t, Monomial>&, const std::pair<std::size_t, Monomial>&)>>
      row_of([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return GrlexGreater{}(a.second, b.second);
      });
  for (const auto& parts : imgs)
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (const auto& t : parts[k].terms()) row_of.try_emplace({k, t.monomial}, row_of.size());
  if (row_of.empty()) return basis;
  RatMatrix m(row_of.size(), basis.size());
  for (std::size_t a = 0; a < imgs.size(); ++a)
    for (std::size_t k = 0; k < imgs[a].size(); ++k)
      for (const auto& t : imgs[a][k].terms()) m(row_of.at({k, t.monomial}), a) = t.coefficient;
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(m)) {
    Polynomial f(n);
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (sgn(v[a]) != 0) f += basis[a] * v[a];
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t span_dim(const std::vector<Polynomial>& polys, std::size_t nvars) {
  return EchelonSpan::of(nvars, polys).dim();
}

std::vector<Polynomial> homogeneous_parts(const Polynomial& f) {
  std::vector<Polynomial> parts;
  if (f.is_zero()) return parts;
  for (int r = 0; r <= f.degree(); ++r) {
    Polynomial part = f.homogeneous_component(static_cast<unsigned>(r));
    if (!part.is_zero()) parts.push_back(std::move(part));
  }
  return parts;
}

UniPoly to_unipoly(const std::vector<long>& coefficients) {
  UniPoly p;
  for (long c : coefficients) p.push_back(Rational(c));
  return trim(std::move(p));
}

// <,> between two graded families over degree pairs (j, d - j); full rank per block.
std::vector<BlockRank> form_blocks(const QmContext& ctx, const GradedBasis& basis, bool& all_full) {
  const unsigned d = ctx.d();
  std::vector<BlockRank> blocks;
  all_full = true;
  for (unsigned j = 0; 2 * j <= d; ++j) {
    const auto left = basis.slices.find(j);
    const auto right = basis.slices.find(d - j);
    const std::size_t rows = left == basis.slices.end() ? 0 : left->second.size();
    const std::size_t cols = right == basis.slices.end() ? 0 : right->second.size();
    if (rows == 0 && cols == 0) continue;
    BlockRank b{j, rows, cols, 0};
    if (rows && cols) {
      RatMatrix m(rows, cols);
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t c = 0; c < cols; ++c) m(a, c) = ctx.form(left->second[a], right->second[c]);
      b.rank = rank(m);
    }
    if (b.rank != rows || b.rank != cols) all_full = false;
    blocks.push_back(b);
  }
  return blocks;
}

}  // namespace

Discriminant discriminant(const CoxeterGroup& g, const MultiplicityFunction& m) {
  const std::size_t n = g.dim();
  Discriminant disc{Polynomial::constant(n, 1), Polynomial::constant(n, 1), 0};
  for (const auto& s : g.reflections()) {
    const Polynomial a = s.alpha.to_polynomial();
    const unsigned ms = m(s);
    if (ms) disc.delta_m *= a.pow(ms);
    disc.delta_2m1 *= a.pow(2 * ms + 1);
    disc.d += 2 * ms + 1;
  }
  return disc;
}

std::size_t GradedBasis::total() const {
  std::size_t t = 0;
  for (const auto& [j, b] : slices) t += b.size();
  return t;
}

std::vector<long> GradedBasis::dims(unsigned top) const {
  std::vector<long> out(top + 1, 0);
  for (const auto& [j, b] : slices)
    if (j <= top) out[j] = static_cast<long>(b.size());
  return out;
}

std::vector<Polynomial> GradedBasis::flatten() const {
  std::vector<Polynomial> out;
  for (const auto& [j, b] : slices) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<unsigned> GradedBasis::degrees() const {
  std::vector<unsigned> out;
  for (const auto& [j, b] : slices) out.insert(out.end(), b.size(), j);
  return out;
}

std::vector<Polynomial> invariant_monomials(const InvariantSet& inv, unsigned j) {
  std::vector<Polynomial> out;
  if (inv.generators.empty()) return out;
  const std::size_t n = inv.generators.front().nvars();
  std::function<void(std::size_t, unsigned, const Polynomial&)> rec = [&](std::size_t i, unsigned left,
                                                                          const Polynomial& acc) {
    if (i == inv.generators.size()) {
      if (left == 0) out.push_back(acc);
      return;
    }
    Polynomial cur = acc;
    for (unsigned used = 0; used <= left; used += inv.degrees[i]) {
      rec(i + 1, left - used, cur);
      if (inv.degrees[i] == 0) break;
      cur *= inv.generators[i];
    }
  };
  rec(0, j, Polynomial::constant(n, 1));
  return out;
}

QmContext::QmContext(const CoxeterGroup& g, const MultiplicityFunction& m)
    : g_(&g), m_(m), ring_(g, m), cm_(g, m), inv_(invariant_generators(g)), disc_(discriminant(g, m)) {}

unsigned QmContext::default_cap() const {
  unsigned top = 0;
  for (unsigned di : inv_.degrees) top = std::max(top, di);
  return disc_.d + top;
}

const EchelonSpan& QmContext::ideal_slice(unsigned j) const {
  auto it = ideal_.find(j);
  if (it != ideal_.end()) return it->second;
  EchelonSpan span(g_->dim());
  for (std::size_t i = 0; i < inv_.generators.size(); ++i) {
    if (inv_.degrees[i] > j) continue;
    for (const auto& b : q_slice(j - inv_.degrees[i]).basis()) span.insert(inv_.generators[i] * b);
  }
  return ideal_.emplace(j, std::move(span)).first->second;
}

const std::vector<Polynomial>& QmContext::t_slice(unsigned j) const {
  auto it = t_.find(j);
  if (it != t_.end()) return it->second;
  const EchelonSpan& ideal = ideal_slice(j);
  std::vector<Polynomial> t;
  for (const auto& b : q_slice(j).basis())
    if (!ideal.pivot_index(b.leading_term().monomial)) t.push_back(ideal.reduce(b));
  return t_.emplace(j, std::move(t)).first->second;
}

ComplementT QmContext::complement_T() const {
  ComplementT out;
  for (unsigned j = 0; j <= d(); ++j) {
    const auto& t = t_slice(j);
    if (!t.empty()) out.basis.slices[j] = t;
    out.ideal_slices.emplace(j, ideal_slice(j));
  }
  if (out.basis.total() != order())
    throw CodimMismatch("complement of I_m through degree " + std::to_string(d()) + " has " +
                        std::to_string(out.basis.total()) + " elements, |W| = " + std::to_string(order()));
  return out;
}

const RationalOp& QmContext::integral(std::size_t i) const {
  auto it = integrals_.find(i);
  if (it != integrals_.end()) return it->second;
  return integrals_.emplace(i, cm_.integral_from_invariant(inv_.generators[i], false).op).first->second;
}

const EchelonSpan& QmContext::harmonic_slice(unsigned j) const {
  auto it = harmonic_.find(j);
  if (it != harmonic_.end()) return it->second;
  // H_m lies in Ker H since |x|^2 is an invariant; filter by H first.
  std::vector<Polynomial> cur = kernel(q_slice(j).basis(), [&](const Polynomial& f) {
    return std::vector<Polynomial>{cm_.apply_hamiltonian(f)};
  });
  for (std::size_t i = 0; i < inv_.generators.size() && !cur.empty(); ++i) {
    if (inv_.degrees[i] > j) continue;
    cur = kernel(cur, [&](const Polynomial& f) { return std::vector<Polynomial>{integral(i).apply(f)}; });
  }
  return harmonic_.emplace(j, EchelonSpan::of(g_->dim(), cur)).first->second;
}

HarmonicSpace QmContext::harmonic_space() const {
  HarmonicSpace hs;
  std::size_t total = 0;
  const unsigned limit = default_cap();
  unsigned j = 0;
  for (; j <= d() || (total < order() && j <= limit); ++j) {
    const auto& h = harmonic_slice(j);
    if (h.dim()) hs.basis.slices[j] = h.basis();
    total += h.dim();
  }
  hs.dims.coefficients = hs.basis.dims(j - 1);
  hs.dims.closed_form = RationalSeries{to_unipoly(hs.dims.coefficients), UniPoly{Rational(1)}};
  if (total != order())
    throw DimensionMismatch("dim H_m = " + std::to_string(total) + " but |W| = " + std::to_string(order()));
  return hs;
}

Rational QmContext::pairing(const Polynomial& p, const Polynomial& q) const {
  Rational total = 0;
  const auto ps = homogeneous_parts(p);
  const auto qs = homogeneous_parts(q);
  for (const auto& a : ps)
    for (const auto& b : qs)
      if (a.degree() == b.degree()) total += cm_.berest_apply(b, a).constant_term();
  return total;
}

const std::vector<Rational>& QmContext::functional(unsigned i) const {
  auto it = functionals_.find(i);
  if (it != functionals_.end()) return it->second;
  std::vector<Rational> values;
  if (i == 0) {
    for (const auto& b : q_slice(0).basis()) values.push_back(b.constant_term());
  } else {
    const auto& below = functional(i - 1);
    const auto& target = q_slice(2 * i - 2);
    for (const auto& b : q_slice(2 * i).basis()) {
      const auto coords = target.coordinates(cm_.apply_hamiltonian(b));
      if (!coords) throw Error("H does not preserve Q_m in degree " + std::to_string(2 * i));
      Rational v = 0;
      for (std::size_t k = 0; k < coords->size(); ++k) v += (*coords)[k] * below[k];
      values.push_back(v);
    }
  }
  return functionals_.emplace(i, std::move(values)).first->second;
}

Rational QmContext::apply_functional(unsigned i, const Polynomial& f) const {
  if (f.is_zero()) return 0;
  const auto coords = q_slice(2 * i).coordinates(f);
  if (!coords) throw NonPolynomialResult("polynomial of degree " + std::to_string(2 * i) + " is not in Q_m");
  const auto& lambda = functional(i);
  Rational v = 0;
  for (std::size_t k = 0; k < coords->size(); ++k) v += (*coords)[k] * lambda[k];
  return v;
}

RatMatrix QmContext::gram(unsigned j) const {
  const auto& basis = q_slice(j).basis();
  const std::size_t k = basis.size();
  RatMatrix g(k, k);
  if (k == 0) return g;
  const Rational c = cm_.berest_constant(basis.front());
  // H^s applied to each basis element.
  std::vector<std::vector<Polynomial>> powers(k);
  for (std::size_t a = 0; a < k; ++a) {
    powers[a].push_back(basis[a]);
    while (!powers[a].back().is_zero() && powers[a].size() <= j)
      powers[a].push_back(cm_.apply_hamiltonian(powers[a].back()));
  }
  // (b_a, b_b) = c sum_s (-1)^s C(j, s) phi_{j-s}(b_b H^s b_a)
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Rational v = 0;
      for (unsigned s = 0; s < powers[a].size() && s <= j; ++s) {
        if (powers[a][s].is_zero()) break;
        Rational term = apply_functional(j - s, basis[b] * powers[a][s]) * binomial(j, s);
        v += s % 2 ? Rational(-term) : term;
      }
      g(a, b) = c * v;
    }
  return g;
}

Polynomial QmContext::pi_m(const Polynomial& q) const {
  Polynomial out(g_->dim());
  for (const auto& part : homogeneous_parts(q)) out += cm_.berest_apply(part, disc_.delta_2m1);
  return out;
}

Rational QmContext::form(const Polynomial& p, const Polynomial& q) const { return pi_m(p * q).constant_term(); }

// ---- checks ----------------------------------------------------------------

FreenessReport freeness_check(const QmContext& ctx, unsigned cap) {
  FreenessReport r;
  r.cap = cap;
  const std::size_t n = ctx.group().dim();
  std::vector<long> q_dims, t_dims;
  bool rows_ok = true;
  for (unsigned j = 0; j <= cap; ++j) {
    const auto& slice = ctx.q_slice(j);
    DegreeRow row;
    row.degree = j;
    row.expected = static_cast<long>(slice.dim());
    std::vector<Polynomial> products;
    for (unsigned k = 0; k <= j; ++k) {
      const auto& t = ctx.t_slice(k);
      if (t.empty()) continue;
      const auto monos = invariant_monomials(ctx.invariants(), j - k);
      for (const auto& mono : monos)
        for (const auto& ti : t) products.push_back(mono * ti);
    }
    row.products = static_cast<long>(products.size());
    for (const auto& p : products)
      if (!slice.contains(p)) row.contained = false;
    row.rank = static_cast<long>(span_dim(products, n));
    if (!(row.products == row.expected && row.rank == row.expected && row.contained)) rows_ok = false;
    q_dims.push_back(row.expected);
    const auto& t = ctx.t_slice(j);
    t_dims.push_back(static_cast<long>(t.size()));
    r.t_degrees.insert(r.t_degrees.end(), t.size(), j);
    r.codim += t.size();
    r.rows.push_back(row);
  }
  r.codim_ok = r.codim == ctx.order();

  UniPoly lhs = to_unipoly(q_dims);
  for (unsigned di : ctx.invariants().degrees) lhs = multiply(lhs, one_minus_t_power(di));
  lhs.resize(cap + 1, Rational(0));
  UniPoly rhs;
  for (long c : t_dims) rhs.push_back(Rational(c));
  r.series_identity = lhs == rhs;
  r.passed = rows_ok && r.codim_ok && r.series_identity;
  return r;
}

DualityReport duality_check(const QmContext& ctx) {
  DualityReport r;
  r.d = ctx.d();
  GradedBasis t;
  for (unsigned j = 0; j <= r.d; ++j) {
    const auto& slice = ctx.t_slice(j);
    r.r_dims.push_back(static_cast<long>(slice.size()));
    if (!slice.empty()) t.slices[j] = slice;
  }
  r.top_one = r.r_dims[r.d] == 1;
  r.symmetric = true;
  for (unsigned j = 0; j <= r.d; ++j)
    if (r.r_dims[j] != r.r_dims[r.d - j]) r.symmetric = false;
  r.blocks = form_blocks(ctx, t, r.blocks_full_rank);

  try {
    r.h_dims = ctx.harmonic_space().dims.coefficients;
  } catch (const DimensionMismatch&) {
    for (unsigned j = 0; j <= r.d; ++j) r.h_dims.push_back(static_cast<long>(ctx.harmonic_slice(j).dim()));
  }
  r.h_dims.resize(r.d + 1, 0);
  r.r_equals_h = r.h_dims == r.r_dims;

  RationalSeries series{to_unipoly(r.r_dims), UniPoly{Rational(1)}};
  for (unsigned di : ctx.invariants().degrees) series.denominator = multiply(series.denominator, one_minus_t_power(di));
  const auto st = stanley_check(series, static_cast<unsigned>(ctx.group().dim()));
  r.stanley = st.holds;
  r.stanley_shift = st.shift;
  r.passed = r.top_one && r.symmetric && r.blocks_full_rank && r.r_equals_h && r.stanley;
  return r;
}

HarmonicsReport harmonics_check(const QmContext& ctx) {
  HarmonicsReport r;
  r.order = ctx.order();
  const unsigned d = ctx.d();
  for (unsigned j = 0; j <= d; ++j) {
    r.dims.push_back(static_cast<long>(ctx.harmonic_slice(j).dim()));
    r.total += ctx.harmonic_slice(j).dim();
  }
  const std::size_t n = ctx.group().dim();
  r.contains_one = ctx.harmonic_slice(0).contains(Polynomial::constant(n, 1));
  r.contains_delta = ctx.harmonic_slice(d).contains(ctx.disc().delta_2m1);

  r.orthogonal_to_ideal = true;
  for (unsigned j = 1; j <= d; ++j) {
    const auto& h = ctx.harmonic_slice(j).basis();
    if (h.empty()) continue;
    for (const auto& e : ctx.ideal_slice(j).basis())
      for (const auto& hv : h) {
        ++r.pairs_checked;
        if (sgn(ctx.pairing(e, hv)) != 0) r.orthogonal_to_ideal = false;
      }
  }

  // Anti-invariants of Q_m: none below degree d, a line spanned by delta in degree d.
  r.delta_unique_anti_invariant = true;
  for (unsigned j = 0; j <= d; ++j) {
    const auto anti = kernel(ctx.q_slice(j).basis(), [&](const Polynomial& f) {
      std::vector<Polynomial> out;
      for (const auto& s : ctx.group().reflections()) out.push_back(f + f.substitute(s.matrix));
      return out;
    });
    const std::size_t want = j == d ? 1 : 0;
    if (anti.size() != want) r.delta_unique_anti_invariant = false;
    if (j == d && anti.size() == 1 && !EchelonSpan::of(n, anti).contains(ctx.disc().delta_2m1))
      r.delta_unique_anti_invariant = false;
  }
  r.passed = r.total == r.order && r.contains_one && r.contains_delta && r.orthogonal_to_ideal &&
             r.delta_unique_anti_invariant;
  return r;
}

bool degree_sum_identity(const QmContext& ctx, unsigned& sum, unsigned& expected) {
  sum = 0;
  for (unsigned j = 0; j <= ctx.d(); ++j) sum += j * static_cast<unsigned>(ctx.t_slice(j).size());
  expected = static_cast<unsigned>(ctx.order() / 2 * ctx.d() + (ctx.order() % 2) * ctx.d() / 2);
  return 2 * sum == ctx.order() * ctx.d();
}

DetAReport det_A(const QmContext& ctx, std::size_t cap) {
  const std::size_t order = ctx.order();
  if (order > cap)
    throw CapExceeded("|W| = " + std::to_string(order) + " exceeds the determinant cap " + std::to_string(cap));
  DetAReport r;
  r.order = order;
  const auto t = ctx.complement_T().basis.flatten();
  std::vector<std::vector<Polynomial>> m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t w = 0; w < order; ++w) m[i].push_back(t[i].substitute(ctx.group().element(w)));
  r.determinant = polynomial_determinant(std::move(m));
  if (order % 2 == 0) {
    r.delta_power = ctx.disc().delta_2m1.pow(static_cast<unsigned>(order / 2));
    try {
      const Polynomial q = divide_exact(r.determinant, r.delta_power);
      if (q.is_constant() && !q.is_zero()) {
        r.constant = q.constant_term();
        r.proportional = true;
      }
    } catch (const NotDivisible&) {
    }
  }
  const bool sums = degree_sum_identity(ctx, r.degree_sum, r.expected_degree_sum);
  r.passed = r.proportional && sums;
  return r;
}

LinindepReport linindep_check(const QmContext& ctx) {
  LinindepReport r;
  const std::size_t n = ctx.group().dim();
  const auto t = ctx.complement_T().basis;
  bool contained = true;
  for (const auto& [j, elems] : t.slices)
    for (const auto& ti : elems) {
      Polynomial img = ctx.pi_m(ti);
      if (j > ctx.d() || !ctx.harmonic_slice(ctx.d() - j).contains(img)) contained = false;
      r.images.push_back(std::move(img));
    }
  r.independent = span_dim(r.images, n) == ctx.order();
  std::size_t h_total = 0;
  for (unsigned j = 0; j <= ctx.d(); ++j) h_total += ctx.harmonic_slice(j).dim();
  r.span_equals_h = r.independent && contained && h_total == ctx.order();

  r.kernel_equals_ideal = true;
  for (unsigned j = 0; j <= ctx.d(); ++j) {
    for (const auto& e : ctx.ideal_slice(j).basis())
      if (!ctx.pi_m(e).is_zero()) r.kernel_equals_ideal = false;
    std::vector<Polynomial> imgs;
    for (const auto& b : ctx.q_slice(j).basis()) imgs.push_back(ctx.pi_m(b));
    if (span_dim(imgs, n) != ctx.t_slice(j).size()) r.kernel_equals_ideal = false;
  }
  r.passed = r.independent && r.span_equals_h && r.kernel_equals_ideal;
  return r;
}

ConjectureReport fv_conjecture_checks(const QmContext& ctx, unsigned cap) {
  ConjectureReport r;
  const std::size_t n = ctx.group().dim();
  GradedBasis h;
  for (unsigned j = 0; j <= ctx.d(); ++j) {
    const auto& slice = ctx.harmonic_slice(j);
    if (slice.dim()) h.slices[j] = slice.basis();
  }
  std::vector<Polynomial> images;
  for (const auto& f : h.flatten()) images.push_back(ctx.pi_m(f));
  const std::size_t rk = span_dim(images, n);
  r.pi_injective_on_h = rk == h.total();
  if (!r.pi_injective_on_h) r.witness += "pi_m has rank " + std::to_string(rk) + " on H_m; ";

  r.h_generates_q = true;
  for (unsigned j = 0; j <= cap; ++j) {
    std::vector<Polynomial> products;
    for (const auto& [k, elems] : h.slices) {
      if (k > j) break;
      for (const auto& mono : invariant_monomials(ctx.invariants(), j - k))
        for (const auto& e : elems) products.push_back(mono * e);
    }
    if (span_dim(products, n) != ctx.q_slice(j).dim()) {
      r.h_generates_q = false;
      r.witness += "invariants times H_m miss Q_m in degree " + std::to_string(j) + "; ";
      break;
    }
  }
  bool full = false;
  form_blocks(ctx, h, full);
  r.form_nondegenerate_on_h = full;
  if (!full) r.witness += "<,> degenerate on H_m; ";
  return r;
}

AdjointnessReport adjointness_check(const QmContext& ctx, std::size_t samples, std::uint32_t seed) {
  AdjointnessReport r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const unsigned top = ctx.d();
  std::vector<unsigned> nonempty;
  for (unsigned j = 0; j <= top; ++j)
    if (ctx.q_slice(j).dim()) nonempty.push_back(j);
  auto random_element = [&](unsigned j) {
    const auto& basis = ctx.q_slice(j).basis();
    Polynomial f(ctx.group().dim());
    for (const auto& b : basis) f += b * Rational(coeff(rng));
    if (f.is_zero()) f = basis.front();
    return f;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    // deg p1 = deg q + deg p2
    const unsigned rq = nonempty[rng() % nonempty.size()];
    std::vector<unsigned> choices;
    for (unsigned j : nonempty)
      if (ctx.q_slice(j + rq).dim() && j + rq <= top) choices.push_back(j);
    if (choices.empty()) continue;
    const unsigned r2 = choices[rng() % choices.size()];
    const Polynomial q = random_element(rq);
    const Polynomial p2 = random_element(r2);
    const Polynomial p1 = random_element(r2 + rq);
    const Rational lhs = ctx.pairing(ctx.cm().berest_apply(q, p1), p2);
    const Rational rhs = ctx.pairing(q * p2, p1);
    ++r.samples;
    if (lhs == rhs) ++r.agreed;
  }
  r.passed = r.samples > 0 && r.agreed == r.samples;
  return r;
}

PsiTruncation psi_truncation(const QmContext& ctx, unsigned cap) {
  PsiTruncation psi;
  const std::size_t n = ctx.group().dim();
  psi.symmetric = true;
  for (unsigned j = 0; j <= cap; ++j) {
    const auto& basis = ctx.q_slice(j).basis();
    if (basis.empty()) continue;
    const RatMatrix g = ctx.gram(j);
    RatMatrix inv = inverse(g);
    if (!is_symmetric(inv)) psi.symmetric = false;
    psi.components.emplace(j, std::move(inv));
    psi.bases.emplace(j, basis);
  }

  // psi^(j) as a polynomial in (k, x), optionally with an operator applied in x.
  auto component = [&](unsigned j, const std::function<Polynomial(const Polynomial&)>& in_x) {
    Polynomial out(2 * n);
    const auto it = psi.components.find(j);
    if (it == psi.components.end()) return out;
    const auto& basis = psi.bases.at(j);
    std::vector<Polynomial> xs;
    for (const auto& b : basis) xs.push_back(in_x(b).embed(2 * n, n));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const Polynomial ka = basis[a].embed(2 * n, 0);
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (sgn(it->second(a, b)) != 0) out += ka * xs[b] * it->second(a, b);
    }
    return out;
  };

  psi.eigen_identity = true;
  const auto& inv = ctx.invariants();
  for (std::size_t i = 0; i < inv.generators.size(); ++i) {
    const unsigned r = inv.degrees[i];
    const Polynomial pk = inv.generators[i].embed(2 * n, 0);
    for (unsigned j = 0; j <= cap; ++j) {
      const Polynomial lhs = component(j, [&](const Polynomial& f) { return ctx.integral(i).apply(f); });
      const Polynomial rhs =
          j >= r ? pk * component(j - r, [](const Polynomial& f) { return f; }) : Polynomial(2 * n);
      if (!(lhs == rhs)) psi.eigen_identity = false;
    }
  }
  return psi;
}

B6Report b6_counterexample() {
  const auto start = std::chrono::steady_clock::now();
  B6Report r;
  const CoxeterGroup g = build_group("B6");
  const MultiplicityFunction m(g, {1, 0});
  const std::size_t n = 6;

  std::vector<LinearForm> coords;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(n, Rational(0));
    c[i] = 1;
    coords.emplace_back(std::move(c));
  }
  auto apply_m = [&](std::size_t i, const Polynomial& f) {
    const Polynomial d1 = f.derivative(i);
    return d1.derivative(i) - exact_divide(d1, coords[i]) * Rational(2);
  };
  auto apply_l = [&](unsigned j, const Polynomial& f) {
    Polynomial out(n);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial cur = f;
      for (unsigned k = 0; k < j && !cur.is_zero(); ++k) cur = apply_m(i, cur);
      out += cur;
    }
    return out;
  };

  const Polynomial x1 = Polynomial::variable(n, 0);
  const auto inv = invariant_generators(g);
  const Polynomial& p1 = inv.generators.front();
  r.u = x1.pow(3);
  r.v = r.u * p1;
  r.v_is_p1_u = true;
  r.u_quasiinvariant = is_quasiinvariant(r.u, g, m).holds;
  const Polynomial delta = discriminant(g, m).delta_2m1;
  for (unsigned j = 1; j <= 6; ++j) {
    r.u_harmonic.push_back(apply_l(j, r.u).is_zero());
    r.v_harmonic.push_back(apply_l(j, r.v).is_zero());
    r.delta_harmonic.push_back(apply_l(j, delta).is_zero());
  }

  RationalOp sum_m(n);
  for (std::size_t i = 0; i < n; ++i) {
    sum_m.add_term(Fraction(Polynomial::constant(n, 1)), Monomial::variable(i, 2));
    sum_m.add_term(Fraction(Polynomial::constant(n, -2), {LinearFormPower{coords[i], 1}}), Monomial::variable(i));
  }
  const CalogeroMoser cm(g, m);
  r.hamiltonian_matches = cm.hamiltonian() == sum_m;
  r.pi_v_zero = cm.berest_apply(r.v, delta).is_zero();

  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  const bool u_in_h = r.u_quasiinvariant && all(r.u_harmonic);
  const bool v_in_h = is_quasiinvariant(r.v, g, m).holds && all(r.v_harmonic);
  // v = p_1 u lies in H_m and in I_m; pi_m(v) = 0 puts it in the kernel of pi_m and the radical of <,>.
  r.conjecture_i = !(v_in_h && r.pi_v_zero);
  r.conjecture_ii = !(u_in_h && v_in_h && r.v_is_p1_u);
  r.conjecture_iii = !(v_in_h && r.pi_v_zero && all(r.delta_harmonic));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qm
