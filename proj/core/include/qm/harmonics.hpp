#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/cmsystem.hpp"
#include "qm/coxeter.hpp"
#include "qm/echelon.hpp"
#include "qm/linalg.hpp"
#include "qm/quasiinv.hpp"
#include "qm/series.hpp"

namespace qm {

struct Discriminant {
  Polynomial delta_m;    // prod_s alpha_s^{m_s}
  Polynomial delta_2m1;  // prod_s alpha_s^{2 m_s + 1}
  unsigned d = 0;
};

Discriminant discriminant(const CoxeterGroup& g, const MultiplicityFunction& m);

/// Per-degree bases of a graded subspace.
struct GradedBasis {
  std::map<unsigned, std::vector<Polynomial>> slices;

  std::size_t total() const;
  std::vector<long> dims(unsigned top) const;
  /// All elements by ascending degree.
  std::vector<Polynomial> flatten() const;
  std::vector<unsigned> degrees() const;
};

struct HarmonicSpace {
  GradedBasis basis;
  PoincareData dims;
};

struct ComplementT {
  GradedBasis basis;
  std::map<unsigned, EchelonSpan> ideal_slices;
};

/// Q_m of one group together with everything derived from it. Slices, T, H_m
/// and the pairing functionals are computed on demand and kept. The group
/// must outlive the context.
class QmContext {
 public:
  QmContext(const CoxeterGroup& g, const MultiplicityFunction& m);

  const CoxeterGroup& group() const { return *g_; }
  const MultiplicityFunction& multiplicities() const { return m_; }
  const QuasiinvariantRing& ring() const { return ring_; }
  const CalogeroMoser& cm() const { return cm_; }
  const InvariantSet& invariants() const { return inv_; }
  const Discriminant& disc() const { return disc_; }
  unsigned d() const { return disc_.d; }
  std::size_t order() const { return g_->order(); }
  /// d + max d_i
  unsigned default_cap() const;

  const EchelonSpan& q_slice(unsigned j) const { return ring_.slice(j); }
  /// I_m<j> = sum_i p_i Q_m<j - d_i>.
  const EchelonSpan& ideal_slice(unsigned j) const;
  /// Echelon complement of I_m<j> in Q_m<j>.
  const std::vector<Polynomial>& t_slice(unsigned j) const;
  /// T through degree d; throws CodimMismatch unless it has N elements.
  ComplementT complement_T() const;

  /// L_{p_i} built from Dunkl operators.
  const RationalOp& integral(std::size_t i) const;
  /// H_m<j> as an echelon basis.
  const EchelonSpan& harmonic_slice(unsigned j) const;
  /// Degrees 0..d (extended while the dimension is short of N); throws
  /// DimensionMismatch when the total differs from N.
  HarmonicSpace harmonic_space() const;

  /// (p, q) = (L_q p)(0), for p, q in Q_m.
  Rational pairing(const Polynomial& p, const Polynomial& q) const;
  /// Gram matrix of (,) on the echelon basis of Q_m<j>.
  RatMatrix gram(unsigned j) const;
  /// pi_m(q) = L_q delta_{2m+1}.
  Polynomial pi_m(const Polynomial& q) const;
  /// <p, q> = pi_m(p q)(0).
  Rational form(const Polynomial& p, const Polynomial& q) const;

 private:
  /// Values of f -> (H^i f)(0) on the echelon basis of Q_m<2i>.
  const std::vector<Rational>& functional(unsigned i) const;
  Rational apply_functional(unsigned i, const Polynomial& f) const;

  const CoxeterGroup* g_;
  MultiplicityFunction m_;
  QuasiinvariantRing ring_;
  CalogeroMoser cm_;
  InvariantSet inv_;
  Discriminant disc_;
  mutable std::map<unsigned, EchelonSpan> ideal_;
  mutable std::map<unsigned, std::vector<Polynomial>> t_;
  mutable std::map<std::size_t, RationalOp> integrals_;
  mutable std::map<unsigned, EchelonSpan> harmonic_;
  mutable std::map<unsigned, std::vector<Rational>> functionals_;
};

/// Monomials in the basic invariants of total degree j.
std::vector<Polynomial> invariant_monomials(const InvariantSet& inv, unsigned j);

// ---- checks ----------------------------------------------------------------

struct DegreeRow {
  unsigned degree = 0;
  long expected = 0;  // dim Q_m<j>
  long products = 0;
  long rank = 0;
  bool contained = true;
};

struct FreenessReport {
  unsigned cap = 0;
  std::vector<DegreeRow> rows;
  std::vector<unsigned> t_degrees;
  std::size_t codim = 0;
  bool codim_ok = false;
  bool series_identity = false;
  bool passed = false;
};
FreenessReport freeness_check(const QmContext& ctx, unsigned cap);

struct BlockRank {
  unsigned degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
};

struct DualityReport {
  unsigned d = 0;
  std::vector<long> r_dims;
  std::vector<long> h_dims;
  bool top_one = false;
  bool symmetric = false;
  std::vector<BlockRank> blocks;
  bool blocks_full_rank = false;
  bool r_equals_h = false;
  bool stanley = false;
  int stanley_shift = 0;
  bool passed = false;
};
DualityReport duality_check(const QmContext& ctx);

struct HarmonicsReport {
  std::vector<long> dims;
  std::size_t total = 0;
  std::size_t order = 0;
  bool contains_one = false;
  bool contains_delta = false;
  bool orthogonal_to_ideal = false;
  std::size_t pairs_checked = 0;
  bool delta_unique_anti_invariant = false;
  bool passed = false;
};
HarmonicsReport harmonics_check(const QmContext& ctx);

struct DetAReport {
  std::size_t order = 0;
  Polynomial determinant;
  Polynomial delta_power;
  Rational constant = 0;
  bool proportional = false;
  unsigned degree_sum = 0;
  unsigned expected_degree_sum = 0;
  bool passed = false;
};
/// Throws CapExceeded when |W| > cap.
DetAReport det_A(const QmContext& ctx, std::size_t cap = 8);
/// The degree-sum identity alone, for groups too large for the determinant.
bool degree_sum_identity(const QmContext& ctx, unsigned& sum, unsigned& expected);

struct LinindepReport {
  std::vector<Polynomial> images;
  bool independent = false;
  bool span_equals_h = false;
  bool kernel_equals_ideal = false;
  bool passed = false;
};
LinindepReport linindep_check(const QmContext& ctx);

struct ConjectureReport {
  bool pi_injective_on_h = false;
  bool h_generates_q = false;
  bool form_nondegenerate_on_h = false;
  std::string witness;
};
ConjectureReport fv_conjecture_checks(const QmContext& ctx, unsigned cap);

struct AdjointnessReport {
  std::size_t samples = 0;
  std::size_t agreed = 0;
  bool passed = false;
};
AdjointnessReport adjointness_check(const QmContext& ctx, std::size_t samples, std::uint32_t seed = 11);

/// Graded components of psi as inverse Gram matrices against the Q_m slice bases.
struct PsiTruncation {
  std::map<unsigned, RatMatrix> components;
  std::map<unsigned, std::vector<Polynomial>> bases;
  bool symmetric = false;
  bool eigen_identity = false;
};
/// Throws SingularGram if some Gram matrix through `cap` is singular.
PsiTruncation psi_truncation(const QmContext& ctx, unsigned cap);

/// The rank-6 counterexample, using the explicit operators L_{p_j} = sum_i M_i^j with
/// M = d^2 - (2/x) d in each coordinate.
struct B6Report {
  Polynomial u;
  Polynomial v;
  bool u_quasiinvariant = false;
  std::vector<bool> u_harmonic;  // L_{p_j} u == 0, j = 1..6
  std::vector<bool> v_harmonic;
  std::vector<bool> delta_harmonic;
  bool hamiltonian_matches = false;  // hamiltonian(B6) == sum_i M_i
  bool v_is_p1_u = false;
  bool pi_v_zero = false;
  // Conjecture verdicts: true means the conjecture holds on this data.
  bool conjecture_i = true;
  bool conjecture_ii = true;
  bool conjecture_iii = true;
  double seconds = 0;
};
B6Report b6_counterexample();

}  // namespace qm
