#include "qmcli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "qm/cmsystem.hpp"
#include "qm/coxeter.hpp"
#include "qm/error.hpp"
#include "qm/harmonics.hpp"
#include "qm/quasiinv.hpp"
#include "qm/series.hpp"

#ifndef QM_VERSION
#define QM_VERSION "unknown"
#endif

namespace qmcli {

namespace {

const std::vector<CheckInfo> kChecks = {
    {"poincare", "Hilbert series of Q_m and its closed form", "poincare-series"},
    {"arrangement-lines", "quasiinvariants of a line arrangement; Gorenstein exactly for Coxeter configurations",
     "remark:line-arrangements"},
    {"freeness", "Q_m is a free module of rank |W| over the invariants", "theorem:free-module"},
    {"duality", "Q_m is Gorenstein; <,> pairs R_m<j> with R_m<d-j>", "theorem:gorenstein"},
    {"gorenstein-stanley", "P_{Q_m} satisfies Stanley's palindromy criterion", "theorem:gorenstein/stanley"},
    {"harmonics", "dim H_m = |W|, H_m orthogonal to I_m, 1 and delta_{2m+1} harmonic", "proposition:harmonics"},
    {"detA", "det(t_i(w k)) = c delta_{2m+1}(k)^{|W|/2} with c != 0", "lemma:determinant"},
    {"linindep", "pi_m(T) is a basis of H_m and Ker pi_m = I_m", "proposition:pi-surjective"},
    {"commutators", "[L_p, H] = 0 and [L_p, L_q] = 0 for basic invariants", "theorem:quantum-integrals"},
    {"cross-construction", "Berest's ad-power integral equals the Dunkl integral on invariants",
     "proposition:berest-formula"},
    {"adjointness", "(L_q p1, p2) = (p1, q p2)", "proposition:pairing-adjoint"},
    {"psi", "graded components of psi invert the Gram matrices and are joint eigenfunctions",
     "theorem:baker-akhiezer"},
    {"shift-a1", "rank-one shift operator: intertwiner, psi and kernel series", "rank-one:shift-operator"},
    {"fv-conjectures", "pi_m injective on H_m, H_m generates Q_m, <,> nondegenerate on H_m",
     "conjectures:harmonics"},
    {"fv-counterexample-b6", "u = x1^3 and v = x1^3 p1 in H_m for B6 refute the harmonic conjectures",
     "counterexample:b6"},
};

std::string str(const qm::Rational& r) { return qm::to_string(r); }

Json series_json(const qm::RationalSeries& s) {
  Json j;
  j["text"] = s.to_string();
  Json num = Json::array(), den = Json::array();
  for (const auto& c : s.numerator) num.push_back(str(c));
  for (const auto& c : s.denominator) den.push_back(str(c));
  j["numerator"] = num;
  j["denominator"] = den;
  return j;
}

qm::UniPoly to_unipoly(const std::vector<long>& v) {
  qm::UniPoly p;
  for (long c : v) p.push_back(qm::Rational(c));
  return qm::trim(std::move(p));
}

bool proportional(const qm::LinearForm& a, const qm::LinearForm& b) {
  std::optional<qm::Rational> ratio;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (sgn(a[i]) == 0 && sgn(b[i]) == 0) continue;
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) return false;
    const qm::Rational r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

// Every hyperplane is mapped into the arrangement by every reflection, with equal multiplicity.
bool coxeter_closed(const qm::Arrangement& a) {
  const auto& hs = a.hyperplanes();
  for (const auto& s : hs)
    for (const auto& h : hs) {
      const qm::LinearForm image = h.alpha.compose(s.reflection);
      bool found = false;
      for (const auto& k : hs)
        if (proportional(image, k.alpha) && k.multiplicity == h.multiplicity) found = true;
      if (!found) return false;
    }
  return true;
}

struct Outcome {
  std::string verdict;
  Json witness = Json::object();
};

Outcome pass_if(bool ok, Json witness) { return {ok ? "PASS" : "FAIL", std::move(witness)}; }

Json long_array(const std::vector<long>& v) { return Json(v); }

class Scenario {
 public:
  explicit Scenario(const ScenarioConfig& cfg) : cfg_(cfg) {
    const bool b6_only = std::all_of(cfg.checks.begin(), cfg.checks.end(),
                                     [](const std::string& c) { return c == "fv-counterexample-b6"; });
    if (b6_only) {
      // the counterexample fixes its own group and multiplicities
      if (!cfg.group.empty() && cfg.group != "B6") throw qm::ParseError("fv-counterexample-b6 runs on B6 only");
      if (!cfg.arrangement.empty()) throw qm::ParseError("fv-counterexample-b6 does not take an arrangement");
    } else if (!cfg.group.empty()) {
      group_ = std::make_unique<qm::CoxeterGroup>(qm::build_group(cfg.group));
      mult_ = qm::MultiplicityFunction(*group_, cfg.multiplicities);
      ctx_ = std::make_unique<qm::QmContext>(*group_, mult_);
      cap_ = cfg.degree_cap.value_or(ctx_->default_cap());
    } else if (!cfg.arrangement.empty()) {
      arrangement_ = std::make_unique<qm::Arrangement>(qm::Arrangement::parse(cfg.arrangement));
      ring_ = std::make_unique<qm::QuasiinvariantRing>(*arrangement_);
      cap_ = cfg.degree_cap.value_or(12);
    }
  }

  Json describe() const {
    Json s;
    s["name"] = cfg_.name;
    if (group_) {
      s["group"] = group_->name();
      s["dim"] = group_->dim();
      s["order"] = group_->order();
      Json classes = Json::array();
      const auto sizes = group_->class_sizes();
      for (std::size_t c = 0; c < group_->num_classes(); ++c)
        classes.push_back({{"name", group_->class_names()[c]}, {"size", sizes[c]}, {"m", mult_.of_class(c)}});
      s["classes"] = classes;
      s["invariant_degrees"] = ctx_->invariants().degrees;
      s["d"] = ctx_->d();
      s["degree_cap"] = cap_;
    } else if (arrangement_) {
      s["arrangement"] = arrangement_->to_string();
      s["dim"] = arrangement_->dim();
      s["degree_cap"] = cap_;
    } else {
      s["group"] = "B6";
      s["multiplicities"] = "short 1, long 0";
    }
    return s;
  }

  std::optional<Json> poincare_table() const {
    if (!group_ && !arrangement_) return std::nullopt;
    Json p;
    const auto data = poincare();
    p["coefficients"] = long_array(data.coefficients);
    if (data.closed_form) p["closed_form"] = series_json(*data.closed_form);
    if (ctx_) {
      std::vector<long> t;
      for (unsigned j = 0; j <= ctx_->d(); ++j) t.push_back(static_cast<long>(ctx_->t_slice(j).size()));
      p["complement_dims"] = long_array(t);
    }
    return p;
  }

  Outcome run(const std::string& id) {
    static const std::map<std::string, Outcome (Scenario::*)()> table = {
        {"poincare", &Scenario::poincare_check},
        {"arrangement-lines", &Scenario::arrangement_check},
        {"freeness", &Scenario::freeness},
        {"duality", &Scenario::duality},
        {"gorenstein-stanley", &Scenario::stanley},
        {"harmonics", &Scenario::harmonics},
        {"detA", &Scenario::det},
        {"linindep", &Scenario::linindep},
        {"commutators", &Scenario::commutators},
        {"cross-construction", &Scenario::cross_construction},
        {"adjointness", &Scenario::adjointness},
        {"psi", &Scenario::psi},
        {"shift-a1", &Scenario::shift},
        {"fv-conjectures", &Scenario::conjectures},
        {"fv-counterexample-b6", &Scenario::b6},
    };
    if (id != "fv-counterexample-b6" && id != "poincare" && id != "arrangement-lines") need_group(id);
    if (id == "arrangement-lines" && !arrangement_) throw qm::ParseError("arrangement-lines needs an arrangement");
    try {
      return (this->*table.at(id))();
    } catch (const qm::DimensionMismatch& e) {
      return {"FAIL", {{"error", e.what()}}};
    } catch (const qm::CodimMismatch& e) {
      return {"FAIL", {{"error", e.what()}}};
    } catch (const qm::SingularGram& e) {
      return {"FAIL", {{"error", e.what()}}};
    }
  }

 private:
  void need_group(const std::string& id) const {
    if (!ctx_) throw qm::ParseError("check '" + id + "' needs a group");
  }
  void need_cap_at_least_d(const std::string& id) const {
    if (cap_ < ctx_->d())
      throw qm::CapExceeded("check '" + id + "' needs degree_cap >= d = " + std::to_string(ctx_->d()));
  }

  qm::RationalSeries group_series() const {
    std::vector<long> t;
    for (unsigned j = 0; j <= ctx_->d(); ++j) t.push_back(static_cast<long>(ctx_->t_slice(j).size()));
    qm::RationalSeries s{to_unipoly(t), qm::UniPoly{qm::Rational(1)}};
    for (unsigned di : ctx_->invariants().degrees) s.denominator = qm::multiply(s.denominator, qm::one_minus_t_power(di));
    return s;
  }

  qm::PoincareData poincare() const {
    if (ring_) return ring_->poincare(cap_);
    qm::PoincareData data;
    data.coefficients = ctx_->ring().dimensions(cap_);
    data.closed_form = group_series();
    return data;
  }

  Outcome poincare_check() {
    if (!ctx_ && !ring_) throw qm::ParseError("poincare needs a group or an arrangement");
    const auto data = poincare();
    Json w;
    w["coefficients"] = long_array(data.coefficients);
    if (data.closed_form) w["closed_form"] = data.closed_form->to_string();
    return pass_if(data.closed_form.has_value() && data.closed_form_matches() && data.nonnegative(), w);
  }

  Outcome arrangement_check() {
    const auto data = ring_->poincare(cap_);
    const bool closed = coxeter_closed(*arrangement_);
    Json w;
    w["coefficients"] = long_array(data.coefficients);
    w["coxeter_configuration"] = closed;
    if (!data.closed_form) {
      w["closed_form"] = nullptr;
      return {"FAIL", w};
    }
    w["closed_form"] = data.closed_form->to_string();
    const auto st = qm::stanley_check(*data.closed_form, static_cast<unsigned>(arrangement_->dim()));
    w["stanley"] = st.holds;
    if (st.holds) w["stanley_shift"] = st.shift;
    // Non-Coxeter configurations are reported as data.
    return pass_if(!closed || st.holds, w);
  }

  Outcome freeness() {
    need_cap_at_least_d("freeness");
    const auto r = qm::freeness_check(*ctx_, cap_);
    Json rows = Json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"degree", row.degree},
                      {"dim_q", row.expected},
                      {"products", row.products},
                      {"rank", row.rank},
                      {"contained", row.contained}});
    Json w;
    w["t_degrees"] = r.t_degrees;
    w["codim"] = r.codim;
    w["series_identity"] = r.series_identity;
    w["rows"] = rows;
    return pass_if(r.passed, w);
  }

  Outcome duality() {
    need_cap_at_least_d("duality");
    const auto r = qm::duality_check(*ctx_);
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
      blocks.push_back({{"degree", b.degree}, {"rows", b.rows}, {"cols", b.cols}, {"rank", b.rank}});
    Json w;
    w["d"] = r.d;
    w["r_dims"] = long_array(r.r_dims);
    w["h_dims"] = long_array(r.h_dims);
    w["top_one"] = r.top_one;
    w["symmetric"] = r.symmetric;
    w["blocks"] = blocks;
    w["r_equals_h"] = r.r_equals_h;
    w["stanley"] = r.stanley;
    return pass_if(r.passed, w);
  }

  Outcome stanley() {
    const auto s = group_series();
    const auto st = qm::stanley_check(s, static_cast<unsigned>(group_->dim()));
    Json w;
    w["series"] = s.to_string();
    w["holds"] = st.holds;
    if (st.holds) w["shift"] = st.shift;
    return pass_if(st.holds, w);
  }

  Outcome harmonics() {
    need_cap_at_least_d("harmonics");
    const auto r = qm::harmonics_check(*ctx_);
    Json w;
    w["dims"] = long_array(r.dims);
    w["total"] = r.total;
    w["order"] = r.order;
    w["contains_one"] = r.contains_one;
    w["contains_delta"] = r.contains_delta;
    w["orthogonal_to_ideal"] = r.orthogonal_to_ideal;
    w["pairs_checked"] = r.pairs_checked;
    w["delta_unique_anti_invariant"] = r.delta_unique_anti_invariant;
    return pass_if(r.passed, w);
  }

  Outcome det() {
    Json w;
    unsigned sum = 0, expected = 0;
    const bool sums = qm::degree_sum_identity(*ctx_, sum, expected);
    w["degree_sum"] = sum;
    w["expected_degree_sum"] = expected;
    if (ctx_->order() > cfg_.det_cap) {
      w["determinant"] = "skipped: |W| = " + std::to_string(ctx_->order()) + " > det_cap";
      return pass_if(sums, w);
    }
    const auto r = qm::det_A(*ctx_, cfg_.det_cap);
    w["proportional"] = r.proportional;
    w["constant"] = str(r.constant);
    w["delta"] = ctx_->disc().delta_2m1.to_string();
    return pass_if(r.passed, w);
  }

  Outcome linindep() {
    const auto r = qm::linindep_check(*ctx_);
    Json images = Json::array();
    for (const auto& p : r.images) images.push_back(p.to_string());
    Json w;
    w["independent"] = r.independent;
    w["span_equals_h"] = r.span_equals_h;
    w["kernel_equals_ideal"] = r.kernel_equals_ideal;
    w["images"] = images;
    return pass_if(r.passed, w);
  }

  Outcome commutators() {
    const auto& inv = ctx_->invariants();
    std::vector<qm::RationalOp> ops;
    Json per = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < inv.generators.size(); ++i) {
      Json e;
      e["invariant"] = inv.generators[i].to_string();
      try {
        ops.push_back(ctx_->cm().integral_from_invariant(inv.generators[i], true).op);
        e["commutes_with_h"] = true;
        e["order"] = ops.back().order();
      } catch (const qm::CommutatorNonzero& ex) {
        ok = false;
        e["commutes_with_h"] = false;
        e["error"] = ex.what();
      } catch (const qm::SymbolMismatch& ex) {
        ok = false;
        e["commutes_with_h"] = false;
        e["error"] = ex.what();
      }
      per.push_back(e);
    }
    Json pairs = Json::array();
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        const bool zero = qm::commutator(ops[i], ops[j]).is_zero();
        ok = ok && zero;
        pairs.push_back({{"i", i + 1}, {"j", j + 1}, {"zero", zero}});
      }
    Json w;
    w["hamiltonian"] = ctx_->cm().hamiltonian().to_string();
    w["integrals"] = per;
    w["pairs"] = pairs;
    return pass_if(ok, w);
  }

  Outcome cross_construction() {
    const auto& inv = ctx_->invariants();
    Json per = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < inv.generators.size(); ++i) {
      const auto berest = ctx_->cm().integral_berest(inv.generators[i]);
      const bool same = berest.op == ctx_->integral(i);
      ok = ok && same;
      per.push_back({{"invariant", inv.generators[i].to_string()}, {"constant", str(berest.constant)}, {"equal", same}});
    }
    return pass_if(ok, {{"invariants", per}});
  }

  Outcome adjointness() {
    const auto r = qm::adjointness_check(*ctx_, cfg_.samples);
    return pass_if(r.passed, {{"samples", r.samples}, {"agreed", r.agreed}});
  }

  Outcome psi() {
    const auto r = qm::psi_truncation(*ctx_, cap_);
    Json comps = Json::object();
    for (const auto& [j, m] : r.components) {
      Json rows = Json::array();
      for (std::size_t a = 0; a < m.rows(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(str(m(a, b)));
        rows.push_back(row);
      }
      comps[std::to_string(j)] = rows;
    }
    Json w;
    w["symmetric"] = r.symmetric;
    w["eigen_identity"] = r.eigen_identity;
    w["inverse_gram"] = comps;
    return pass_if(r.symmetric && r.eigen_identity, w);
  }

  Outcome shift() {
    if (group_->name() != "A1") throw qm::ParseError("shift-a1 needs group A1");
    const unsigned m = mult_.of_class(0);
    Json w;
    w["operator"] = qm::shift_rank1(m, 0).to_string();
    bool ok = true;
    Json inter = Json::object();
    for (const auto& mu : {qm::Rational(0), qm::Rational(1), qm::Rational(1, 2)}) {
      const bool holds = qm::verify_intertwiner(m, mu);
      inter[str(mu)] = holds;
      ok = ok && holds;
    }
    w["intertwiner"] = inter;

    const unsigned top = std::min(cap_, 6u);
    const auto from_shift = qm::psi_from_shift(m, top);
    const auto trunc = qm::psi_truncation(*ctx_, top);
    Json psi = Json::array(), pairings = Json::object();
    bool psi_ok = true;
    for (unsigned j = 0; j <= top; ++j) {
      qm::Rational value = 0;
      const auto it = trunc.components.find(j);
      if (it != trunc.components.end()) {
        const auto& b = trunc.bases.at(j).front();
        const qm::Rational lc = b.leading_term().coefficient;
        value = it->second(0, 0) * lc * lc;
        // (x^j, x^j) through the operator route against 1 / psi_j
        const auto xj = qm::Polynomial::monomial(1, qm::Monomial{j});
        const qm::Rational pr = ctx_->pairing(xj, xj);
        pairings[std::to_string(j)] = str(pr);
        if (pr * from_shift[j] != 1) psi_ok = false;
      }
      if (value != from_shift[j]) psi_ok = false;
      psi.push_back(str(from_shift[j]));
    }
    w["psi"] = psi;
    w["pairings"] = pairings;
    w["psi_matches"] = psi_ok;

    const unsigned kcap = std::max(cap_, 12u);
    const auto q = ctx_->ring().dimensions(kcap);
    const auto k = qm::kernel_series_rank1(m, kcap);
    bool series_ok = true;
    for (unsigned j = 0; j <= kcap; ++j)
      if (q[j] + k[j] != 1) series_ok = false;
    w["kernel_series"] = long_array(k);
    w["series_identity"] = series_ok;
    return pass_if(ok && psi_ok && series_ok, w);
  }

  Outcome conjectures() {
    need_cap_at_least_d("fv-conjectures");
    const auto r = qm::fv_conjecture_checks(*ctx_, cap_);
    Json w;
    w["i_pi_injective_on_h"] = r.pi_injective_on_h;
    w["ii_h_generates_q"] = r.h_generates_q;
    w["iii_form_nondegenerate_on_h"] = r.form_nondegenerate_on_h;
    if (!r.witness.empty()) w["detail"] = r.witness;
    const bool all = r.pi_injective_on_h && r.h_generates_q && r.form_nondegenerate_on_h;
    return {all ? "PASS" : "FINDING", w};
  }

  Outcome b6() {
    const auto r = qm::b6_counterexample();
    auto flags = [](const std::vector<bool>& v) {
      Json a = Json::array();
      for (bool b : v) a.push_back(b);
      return a;
    };
    auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    Json w;
    w["u"] = r.u.to_string();
    w["v"] = r.v.to_string();
    w["u_quasiinvariant"] = r.u_quasiinvariant;
    w["L_u_zero"] = flags(r.u_harmonic);
    w["L_v_zero"] = flags(r.v_harmonic);
    w["L_delta_zero"] = flags(r.delta_harmonic);
    w["hamiltonian_matches"] = r.hamiltonian_matches;
    w["v_is_p1_u"] = r.v_is_p1_u;
    w["pi_v_zero"] = r.pi_v_zero;
    w["conjecture_i_holds"] = r.conjecture_i;
    w["conjecture_ii_holds"] = r.conjecture_ii;
    w["conjecture_iii_holds"] = r.conjecture_iii;
    const bool operators_ok = r.u_quasiinvariant && all(r.u_harmonic) && all(r.v_harmonic) && r.hamiltonian_matches;
    const bool refuted = !r.conjecture_i && !r.conjecture_ii && !r.conjecture_iii;
    return {operators_ok && refuted ? "FINDING" : "FAIL", w};
  }

  const ScenarioConfig& cfg_;
  std::unique_ptr<qm::CoxeterGroup> group_;
  qm::MultiplicityFunction mult_;
  std::unique_ptr<qm::QmContext> ctx_;
  std::unique_ptr<qm::Arrangement> arrangement_;
  std::unique_ptr<qm::QuasiinvariantRing> ring_;
  unsigned cap_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() { return kChecks; }

bool is_registered(const std::string& id) {
  return std::any_of(kChecks.begin(), kChecks.end(), [&](const CheckInfo& c) { return c.id == id; });
}

Json run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Scenario scenario(cfg);

  Json report;
  report["schema_version"] = kSchemaVersion;
  Json meta;
  meta["tool"] = "qmcli";
  meta["version"] = QM_VERSION;
  Json echo;
  echo["name"] = cfg.name;
  if (!cfg.group.empty()) echo["group"] = cfg.group;
  if (!cfg.arrangement.empty()) echo["arrangement"] = cfg.arrangement;
  echo["multiplicities"] = cfg.multiplicities;
  echo["degree_cap"] = cfg.degree_cap ? Json(*cfg.degree_cap) : Json(nullptr);
  echo["checks"] = cfg.checks;
  echo["samples"] = cfg.samples;
  echo["det_cap"] = cfg.det_cap;
  meta["config"] = echo;
  report["metadata"] = meta;
  report["scenario"] = scenario.describe();

  Json results = Json::array();
  Json timings = Json::object();
  for (const auto& c : kChecks) {
    if (std::find(cfg.checks.begin(), cfg.checks.end(), c.id) == cfg.checks.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    auto outcome = scenario.run(c.id);
    timings[c.id] = seconds_since(t0);
    Json r;
    r["check"] = c.id;
    r["statement"] = c.statement;
    r["anchor"] = c.anchor;
    r["verdict"] = outcome.verdict;
    r["witness"] = std::move(outcome.witness);
    results.push_back(std::move(r));
  }
  report["results"] = results;
  if (auto p = scenario.poincare_table()) report["poincare"] = *p;
  timings["total"] = seconds_since(start);
  report["metadata"]["timings"] = timings;
  return report;
}

int exit_code(const Json& report) {
  for (const auto& r : report.at("results"))
    if (r.at("verdict") != "PASS") return 1;
  return 0;
}

Json diff_reports(const Json& a, const Json& b) {
  auto version = [](const Json& r) {
    if (!r.is_object() || !r.contains("schema_version") || !r.contains("results"))
      throw qm::Error("not a qmcli report");
    return r.at("schema_version").get<int>();
  };
  const int va = version(a), vb = version(b);
  if (va != vb) throw qm::Error("schema mismatch: " + std::to_string(va) + " vs " + std::to_string(vb));
  Json ca = a, cb = b;
  for (Json* r : {&ca, &cb})
    if ((*r)["metadata"].is_object()) (*r)["metadata"].erase("timings");
  return Json::diff(ca, cb);
}

}  // namespace qmcli
