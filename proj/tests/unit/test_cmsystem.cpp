#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qm/cmsystem.hpp"
#include "qm/error.hpp"

using namespace qm;
using qm_test::cst;
using qm_test::var;

namespace {

LinearForm coordinate(std::size_t n, std::size_t i) {
  std::vector<Rational> c(n, Rational(0));
  c[i] = 1;
  return LinearForm(std::move(c));
}

RationalOp laplacian(std::size_t n) {
  RationalOp op(n);
  for (std::size_t i = 0; i < n; ++i) op.add_term(Fraction(cst(n, 1)), Monomial::variable(i, 2));
  return op;
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("rank-one Hamiltonian") {
  const CoxeterGroup a1 = build_group("A1");
  const CalogeroMoser cm(a1, MultiplicityFunction(a1, {1}));
  RationalOp m(1);
  m.add_term(Fraction(cst(1, 1)), Monomial{2});
  m.add_term(Fraction(cst(1, -2), {LinearFormPower{coordinate(1, 0), 1}}), Monomial{1});
  CHECK(cm.hamiltonian() == m);
  CHECK(cm.hamiltonian() == rank1_hamiltonian(1));
  CHECK(cm.apply_hamiltonian(var(1, 0).pow(3)).is_zero());
  CHECK(cm.apply_hamiltonian(var(1, 0) * var(1, 0)) == cst(1, -2));
  CHECK_THROWS_AS(cm.apply_hamiltonian(var(1, 0)), NonPolynomialResult);
}

TEST_CASE("zero multiplicity gives the Laplacian") {
  for (const char* label : {"B2", "A2", "(Z/2)^3"}) {
    const CoxeterGroup g = build_group(label);
    const CalogeroMoser cm(g, MultiplicityFunction(g, {0}));
    if (std::string(label) == "A2") {
      // reduced coordinates carry the inverse Gram matrix
      CHECK(cm.hamiltonian().order() == 2);
      CHECK_FALSE(cm.hamiltonian().principal_symbol().is_zero());
    } else {
      CHECK(cm.hamiltonian() == laplacian(g.dim()));
    }
  }
}

TEST_CASE("B2 Hamiltonian term by term") {
  const CoxeterGroup b2 = build_group("B2");
  const CalogeroMoser cm(b2, MultiplicityFunction(b2, {1, 2}));
  RationalOp expected = laplacian(2);
  for (const auto& s : b2.reflections()) {
    const unsigned ms = s.conjugacy_class == 0 ? 1 : 2;
    // metric is the identity, so d_{alpha} = sum_i alpha_i d_i
    for (std::size_t i = 0; i < 2; ++i) {
      if (sgn(s.alpha[i]) == 0) continue;
      expected.add_term(Fraction(cst(2, -2 * static_cast<long>(ms)) * s.alpha[i], {LinearFormPower{s.alpha, 1}}),
                        Monomial::variable(i));
    }
  }
  CHECK(cm.hamiltonian() == expected);
}

TEST_CASE("Dunkl operators commute and match direct application") {
  std::mt19937 rng(31);
  for (const char* label : {"A2", "B2"}) {
    const CoxeterGroup g = build_group(label);
    const CalogeroMoser cm(g, MultiplicityFunction(g, {1}));
    const auto e0 = unit(g.dim(), 0), e1 = unit(g.dim(), 1);
    const RationalOp t0 = cm.dunkl(e0), t1 = cm.dunkl(e1);
    CHECK(commutator(t0, t1).is_zero());
    for (int trial = 0; trial < 5; ++trial) {
      const Polynomial f = qm_test::random_poly(rng, g.dim(), 4);
      CHECK(t0.apply(f) == cm.apply_dunkl(0, f));
      CHECK(t1.apply(f) == cm.apply_dunkl(1, f));
    }
  }
}

TEST_CASE("integrals from invariants") {
  const CoxeterGroup a1 = build_group("A1");
  const CalogeroMoser cm(a1, MultiplicityFunction(a1, {2}));
  const auto l = cm.integral_from_invariant(var(1, 0) * var(1, 0));
  CHECK(l.op == cm.hamiltonian());

  // m = 0: p(d)
  const CoxeterGroup b2 = build_group("B2");
  const CalogeroMoser free(b2, MultiplicityFunction(b2, {0}));
  const auto inv = invariant_generators(b2);
  RationalOp p4(2);
  p4.add_term(Fraction(cst(2, 1)), Monomial{4, 0});
  p4.add_term(Fraction(cst(2, 1)), Monomial{0, 4});
  CHECK(free.integral_from_invariant(inv.generators[1]).op == p4);

  // L_{p_1} for B2 has symbol p_1(xi)
  const CalogeroMoser cmb(b2, MultiplicityFunction(b2, {1, 2}));
  const auto l1 = cmb.integral_from_invariant(inv.generators[0]);
  CHECK(l1.op.principal_symbol() == cmb.expected_symbol(inv.generators[0]));
  const auto l2 = cmb.integral_from_invariant(inv.generators[1]);
  CHECK(commutator(l1.op, l2.op).is_zero());
}

TEST_CASE("Berest construction agrees with the Dunkl route") {
  const CoxeterGroup a1 = build_group("A1");
  const CalogeroMoser cm(a1, MultiplicityFunction(a1, {1}));
  const auto one = cm.integral_berest(cst(1, 1));
  CHECK(one.op == RationalOp::identity(1));
  const auto x2 = cm.integral_berest(var(1, 0) * var(1, 0));
  CHECK(x2.op == cm.integral_from_invariant(var(1, 0) * var(1, 0)).op);
  CHECK(x2.constant == Rational(1, 8));

  // (x^3, x^3) = L_{x^3}(x^3)(0)
  CHECK(cm.berest_apply(var(1, 0).pow(3), var(1, 0).pow(3)) == cst(1, -3));

  for (const char* label : {"A2", "B2"}) {
    const CoxeterGroup g = build_group(label);
    const CalogeroMoser c(g, MultiplicityFunction(g, {1}));
    for (const auto& p : invariant_generators(g).generators)
      CHECK(c.integral_berest(p).op == c.integral_from_invariant(p).op);
  }
}

TEST_CASE("Berest application matches the operator, seeded") {
  std::mt19937 rng(77);
  const CoxeterGroup g = build_group("A2");
  const MultiplicityFunction m(g, {1});
  const CalogeroMoser cm(g, m);
  const QuasiinvariantRing ring(g, m);
  for (unsigned r : {2u, 3u}) {
    const auto& qs = ring.slice(r);
    REQUIRE(qs.dim() > 0);
    const Polynomial q = qm_test::random_element(rng, qs);
    const RationalOp l = cm.integral_berest(q).op;
    for (unsigned j : {3u, 4u, 5u}) {
      if (ring.slice(j).dim() == 0) continue;
      const Polynomial f = qm_test::random_element(rng, ring.slice(j));
      CHECK(cm.berest_apply(q, f) == l.apply(f));
    }
  }
}

TEST_CASE("rank-one shift operator") {
  RationalOp s1(1);
  s1.add_term(Fraction(var(1, 0)), Monomial{1});
  s1.add_term(Fraction(cst(1, -1)), Monomial{0});
  CHECK(shift_rank1(1, 0) == s1);
  RationalOp s3(1);
  s3.add_term(Fraction(var(1, 0)), Monomial{1});
  s3.add_term(Fraction(cst(1, -3)), Monomial{0});
  CHECK(shift_rank1(2, 0) == s3 * s1);
  CHECK(shift_rank1(0, 5) == RationalOp::identity(1));

  for (unsigned m = 0; m <= 3; ++m)
    for (const auto& mu : {Rational(0), Rational(1), Rational(1, 2)}) CHECK(verify_intertwiner(m, mu));

  CHECK(psi_from_shift(1, 3) == std::vector<Rational>{1, 0, Rational(-1, 2), Rational(-1, 3)});
  const std::vector<Rational> exp0{1, 1, Rational(1, 2), Rational(1, 6)};
  CHECK(psi_from_shift(0, 3) == exp0);

  CHECK(kernel_series_rank1(0, 4) == std::vector<long>{0, 0, 0, 0, 0});
  CHECK(kernel_series_rank1(1, 4) == std::vector<long>{0, 1, 0, 0, 0});
  CHECK(kernel_series_rank1(2, 5) == std::vector<long>{0, 1, 0, 1, 0, 0});
}
