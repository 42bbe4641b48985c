// Acceptance run: one PASS/FAIL line per criterion. Exact arithmetic throughout;
// the only tolerances are the wall-clock limits below.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "qm/cmsystem.hpp"
#include "qm/error.hpp"
#include "qm/harmonics.hpp"
#include "qm/quasiinv.hpp"
#include "qmcli/config.hpp"
#include "qmcli/runner.hpp"

#ifndef QM_SOURCE_DIR
#error "QM_SOURCE_DIR must point at the source tree"
#endif

using namespace qm;
namespace fs = std::filesystem;

namespace {

constexpr double kPoincareLimit = 5.0;     // seconds per series
constexpr double kScenarioLimit = 120.0;   // seconds per scenario, criteria 2-4
constexpr double kDeterminantLimit = 300.0;
constexpr double kB6Limit = 10.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Scenario {
  std::string label;
  std::vector<unsigned> m;
  std::string name() const {
    std::string s = label + " m=";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s;
  }
};

// A1, A2, B2, G2 and (Z/2)^n, n <= 3, with every multiplicity function taking values <= 2.
std::vector<Scenario> scenario_set() {
  std::vector<Scenario> out;
  const std::vector<std::pair<std::string, std::size_t>> groups = {
      {"A1", 1}, {"A2", 1}, {"B2", 2}, {"G2", 2}, {"(Z/2)^1", 1}, {"(Z/2)^2", 2}, {"(Z/2)^3", 3}};
  for (const auto& [label, classes] : groups) {
    std::vector<unsigned> m(classes, 0);
    while (true) {
      out.push_back({label, m});
      std::size_t i = 0;
      while (i < classes && m[i] == 2) m[i++] = 0;
      if (i == classes) break;
      ++m[i];
    }
  }
  return out;
}

class Contexts {
 public:
  QmContext& get(const Scenario& s) {
    const std::string key = s.name();
    auto it = ctx_.find(key);
    if (it != ctx_.end()) return *it->second;
    auto& g = groups_[s.label];
    if (!g) g = std::make_unique<CoxeterGroup>(build_group(s.label));
    auto ctx = std::make_unique<QmContext>(*g, MultiplicityFunction(*g, s.m));
    return *ctx_.emplace(key, std::move(ctx)).first->second;
  }

 private:
  std::map<std::string, std::unique_ptr<CoxeterGroup>> groups_;
  std::map<std::string, std::unique_ptr<QmContext>> ctx_;
};

std::vector<long> taylor_long(const RationalSeries& s, std::size_t count) {
  std::vector<long> out;
  for (const auto& c : s.taylor(count)) out.push_back(c.get_num().get_si());
  return out;
}

struct Detail {
  std::ostringstream text;
  bool ok = true;
  void fail(const std::string& what) {
    if (ok) text << "first failure: " << what;
    ok = false;
  }
};

// Runs f on every scenario under a per-scenario time limit.
void per_scenario(Contexts& contexts, const std::vector<Scenario>& set, double limit, Detail& d,
                  const std::function<bool(QmContext&)>& f) {
  double worst = 0;
  std::string worst_name;
  for (const auto& s : set) {
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = f(contexts.get(s));
    } catch (const Error& e) {
      d.fail(s.name() + ": " + e.what());
      continue;
    }
    const double t = since(t0);
    if (t > worst) {
      worst = t;
      worst_name = s.name();
    }
    if (!ok) d.fail(s.name());
    if (t > limit) d.fail(s.name() + " exceeded the time limit");
  }
  if (d.ok) d.text << set.size() << " scenarios, slowest " << worst_name << " " << std::fixed << std::setprecision(2) << worst << " s";
}

bool criterion_poincare(Detail& d) {
  auto timed = [&](const std::function<void()>& f, const char* what) {
    const auto t0 = Clock::now();
    f();
    if (since(t0) > kPoincareLimit) d.fail(std::string(what) + " exceeded the time limit");
  };
  const RationalSeries z2{multiply({1, -1, 1}, {1, -1, 1}), multiply({1, -1}, {1, -1})};
  const RationalSeries skew{{1, -2, 2}, {1, -2, 1}};
  timed([&] {
    const CoxeterGroup g = build_group("(Z/2)^2");
    if (poincare_series(g, MultiplicityFunction(g, {1}), 12).coefficients != taylor_long(z2, 13)) d.fail("(Z/2)^2 series");
  }, "(Z/2)^2");
  timed([&] {
    const auto p = QuasiinvariantRing(Arrangement::parse("1 0 : 1 ; 0 1 : 1")).poincare(12);
    if (p.coefficients != taylor_long(z2, 13)) d.fail("perpendicular series");
    if (!p.closed_form || !stanley_check(*p.closed_form, 2).holds) d.fail("perpendicular Stanley");
  }, "perpendicular lines");
  timed([&] {
    const auto p = QuasiinvariantRing(Arrangement::parse("1 0 : 1 ; 1 1 : 1")).poincare(12);
    if (p.coefficients != taylor_long(skew, 13)) d.fail("skew series");
    if (!p.closed_form || stanley_check(*p.closed_form, 2).holds) d.fail("skew Stanley should fail");
  }, "skew lines");
  if (d.ok) d.text << "Z2^2 and both line pairs through degree 12; Stanley holds / fails as expected";
  return d.ok;
}

bool criterion_shift(Detail& d) {
  RationalOp s1(1);
  s1.add_term(Fraction(Polynomial::variable(1, 0)), Monomial{1});
  s1.add_term(Fraction(Polynomial::constant(1, -1)), Monomial{0});
  if (!(shift_rank1(1, 0) == s1)) d.fail("S(1,0)");
  for (unsigned m = 0; m <= 3; ++m)
    for (const auto& mu : {Rational(0), Rational(1), Rational(1, 2)})
      if (!verify_intertwiner(m, mu)) d.fail("intertwiner m=" + std::to_string(m) + " mu=" + to_string(mu));
  const CoxeterGroup a1 = build_group("A1");
  for (unsigned m : {1u, 2u}) {
    QmContext ctx(a1, MultiplicityFunction(a1, {m}));
    const auto trunc = psi_truncation(ctx, 6);
    const auto shift = psi_from_shift(m, 6);
    for (unsigned j = 0; j <= 6; ++j) {
      const auto it = trunc.components.find(j);
      Rational v = 0;
      if (it != trunc.components.end()) {
        const Rational lc = trunc.bases.at(j).front().leading_term().coefficient;
        v = it->second(0, 0) * lc * lc;
      }
      if (v != shift[j]) d.fail("psi component " + std::to_string(j) + " for m=" + std::to_string(m));
    }
  }
  for (unsigned m = 1; m <= 3; ++m) {
    const QuasiinvariantRing ring(a1, MultiplicityFunction(a1, {m}));
    const auto q = ring.dimensions(12);
    const auto k = kernel_series_rank1(m, 12);
    for (unsigned j = 0; j <= 12; ++j)
      if (q[j] + k[j] != 1) d.fail("kernel series m=" + std::to_string(m) + " degree " + std::to_string(j));
  }
  if (d.ok) d.text << "S(1,0) = x d - 1; intertwiners m<=3; psi through degree 6; P_Q + P_Ker = 1/(1-t) through 12";
  return d.ok;
}

bool criterion_golden(Detail& d) {
  const fs::path root(QM_SOURCE_DIR);
  std::size_t count = 0;
  std::vector<fs::path> configs;
  for (const auto& e : fs::directory_iterator(root / "scenarios"))
    if (e.path().extension() == ".cfg") configs.push_back(e.path());
  std::sort(configs.begin(), configs.end());
  for (const auto& cfg_path : configs) {
    const auto cfg = qmcli::load_config(cfg_path.string());
    const fs::path golden = root / "tests" / "golden" / (cfg_path.stem().string() + ".json");
    std::ifstream in(golden);
    if (!in) {
      d.fail("missing golden " + golden.filename().string());
      continue;
    }
    const auto expected = qmcli::Json::parse(in);
    const auto diff = qmcli::diff_reports(qmcli::run_scenario(cfg), expected);
    if (!diff.empty()) d.fail(cfg_path.filename().string() + ": " + diff.dump());
    ++count;
  }
  if (count == 0) d.fail("no scenarios found");
  if (d.ok) d.text << count << " scenario reports match their golden files";
  return d.ok;
}

}  // namespace

int main() {
  const auto set = scenario_set();
  Contexts contexts;

  using Fn = std::function<bool(Detail&)>;
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"Poincare series of (Z/2)^2 and line arrangements", criterion_poincare},
      {"freeness over the invariants",
       [&](Detail& d) {
         per_scenario(contexts, set, kScenarioLimit, d,
                      [](QmContext& c) { return freeness_check(c, c.default_cap()).passed; });
         return d.ok;
       }},
      {"Gorenstein duality",
       [&](Detail& d) {
         per_scenario(contexts, set, kScenarioLimit, d, [](QmContext& c) { return duality_check(c).passed; });
         return d.ok;
       }},
      {"m-harmonic polynomials",
       [&](Detail& d) {
         per_scenario(contexts, set, kScenarioLimit, d, [](QmContext& c) { return harmonics_check(c).passed; });
         return d.ok;
       }},
      {"determinant lemma and degree sums",
       [&](Detail& d) {
         std::vector<Scenario> det_set;
         for (unsigned m = 0; m <= 3; ++m) det_set.push_back({"A1", {m}});
         for (unsigned a = 0; a <= 2; ++a)
           for (unsigned b = 0; b <= 2; ++b) det_set.push_back({"(Z/2)^2", {a, b}});
         det_set.push_back({"A2", {1}});
         per_scenario(contexts, det_set, kDeterminantLimit, d, [](QmContext& c) { return det_A(c).passed; });
         if (!d.ok) return false;
         Detail sums;
         per_scenario(contexts, set, kScenarioLimit, sums, [](QmContext& c) {
           unsigned s = 0, e = 0;
           return degree_sum_identity(c, s, e);
         });
         if (!sums.ok) d.fail("degree sum: " + sums.text.str());
         if (d.ok) d.text << "; degree-sum identity on all " << set.size() << " scenarios";
         return d.ok;
       }},
      {"commutativity of the quantum integrals",
       [&](Detail& d) {
         std::vector<Scenario> rank2;
         for (const auto& s : set)
           if (s.label != "(Z/2)^3") rank2.push_back(s);
         per_scenario(contexts, rank2, kScenarioLimit, d, [](QmContext& c) {
           std::vector<RationalOp> ops;
           for (const auto& p : c.invariants().generators) ops.push_back(c.cm().integral_from_invariant(p, true).op);
           for (std::size_t i = 0; i < ops.size(); ++i)
             for (std::size_t j = i + 1; j < ops.size(); ++j)
               if (!commutator(ops[i], ops[j]).is_zero()) return false;
           return true;
         });
         return d.ok;
       }},
      {"Berest and Dunkl constructions agree",
       [&](Detail& d) {
         per_scenario(contexts, set, kScenarioLimit, d, [](QmContext& c) {
           for (std::size_t i = 0; i < c.invariants().generators.size(); ++i)
             if (!(c.cm().integral_berest(c.invariants().generators[i]).op == c.integral(i))) return false;
           return true;
         });
         const CoxeterGroup a1 = build_group("A1");
         QmContext ctx(a1, MultiplicityFunction(a1, {1}));
         const auto x2 = Polynomial::variable(1, 0).pow(2);
         const Rational value = ctx.pairing(x2, x2);
         if (value != -2 || value * psi_from_shift(1, 2)[2] != 1) d.fail("(x^2, x^2) for A1, m = 1");
         if (d.ok) d.text << "; (x^2,x^2) = -2 = 1/psi_2";
         return d.ok;
       }},
      {"rank-one shift operator", criterion_shift},
      {"rank-six counterexample and dihedral conjectures",
       [&](Detail& d) {
         const auto r = b6_counterexample();
         const bool harmonic = std::all_of(r.u_harmonic.begin(), r.u_harmonic.end(), [](bool b) { return b; }) &&
                               std::all_of(r.v_harmonic.begin(), r.v_harmonic.end(), [](bool b) { return b; });
         if (!harmonic || !r.hamiltonian_matches || !r.u_quasiinvariant) d.fail("B6 operator identities");
         if (r.conjecture_i || r.conjecture_ii || r.conjecture_iii) d.fail("B6 conjectures not refuted");
         if (r.seconds > kB6Limit) d.fail("B6 exceeded the time limit");
         std::vector<Scenario> dihedral;
         for (const char* label : {"(Z/2)^2", "A2", "B2", "G2"})
           for (unsigned m = 0; m <= 2; ++m) dihedral.push_back({label, {m}});
         Detail conj;
         per_scenario(contexts, dihedral, kScenarioLimit, conj, [](QmContext& c) {
           const auto v = fv_conjecture_checks(c, c.default_cap());
           return v.pi_injective_on_h && v.h_generates_q && v.form_nondegenerate_on_h;
         });
         if (!conj.ok) d.fail("dihedral: " + conj.text.str());
         if (d.ok)
           d.text << "B6 refutes (i)-(iii) in " << std::fixed << std::setprecision(2) << r.seconds
                  << " s; conjectures hold on " << dihedral.size() << " dihedral constant-m scenarios";
         return d.ok;
       }},
      {"golden report regression", criterion_golden},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Detail d;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(d);
    } catch (const std::exception& e) {
      d.fail(std::string("exception: ") + e.what());
    }
    ok = ok && d.ok;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(2) << since(t0) << " s)  " << d.text.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
