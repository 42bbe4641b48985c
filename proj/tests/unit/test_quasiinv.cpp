#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qm/coxeter.hpp"
#include "qm/error.hpp"
#include "qm/quasiinv.hpp"

using namespace qm;
using qm_test::var;

namespace {

std::vector<long> taylor_long(const RationalSeries& s, std::size_t count) {
  std::vector<long> out;
  for (const auto& c : s.taylor(count)) out.push_back(c.get_num().get_si());
  return out;
}

// Q_m of (Z/2)^n is spanned by monomials whose i-th exponent is even or >= 2 m_i + 1.
long z2_slice_dim(const std::vector<unsigned>& m, unsigned j) {
  long count = 0;
  for (const auto& mono : monomials_of_degree(m.size(), j)) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mono[i] % 2 == 1 && mono[i] < 2 * m[i] + 1) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("quasiinvariance tests") {
  const CoxeterGroup a1 = build_group("A1");
  const MultiplicityFunction one(a1, {1});
  const auto r = is_quasiinvariant(var(1, 0), a1, one);
  CHECK_FALSE(r.holds);
  CHECK(r.divided == 1);
  CHECK(r.remainder == qm_test::cst(1, 2));
  CHECK(is_quasiinvariant(var(1, 0).pow(3), a1, one).holds);

  const CoxeterGroup b6 = build_group("B6");
  CHECK(is_quasiinvariant(var(6, 0).pow(3), b6, MultiplicityFunction(b6, {1, 0})).holds);
  CHECK_FALSE(is_quasiinvariant(var(6, 0).pow(3), b6, MultiplicityFunction(b6, {1, 1})).holds);
  CHECK_THROWS_AS(is_quasiinvariant(var(2, 0), a1, one), DimensionMismatch);

  for (const char* label : {"A2", "B2", "G2"}) {
    const CoxeterGroup g = build_group(label);
    for (const auto& p : invariant_generators(g).generators)
      CHECK(is_quasiinvariant(p, g, MultiplicityFunction(g, {2})).holds);
  }
}

TEST_CASE("slices of small rings") {
  const CoxeterGroup a1 = build_group("A1");
  const MultiplicityFunction one(a1, {1});
  CHECK(qm_slice(a1, one, 1).dim() == 0);
  const auto s3 = qm_slice(a1, one, 3);
  REQUIRE(s3.dim() == 1);
  CHECK(s3.basis()[0] == var(1, 0).pow(3));

  const CoxeterGroup z2 = build_group("(Z/2)^2");
  const auto t3 = qm_slice(z2, MultiplicityFunction(z2, {1}), 3);
  CHECK(t3.dim() == 2);
  CHECK(t3.contains(var(2, 0).pow(3)));
  CHECK(t3.contains(var(2, 1).pow(3)));
}

TEST_CASE("slice elements are quasiinvariant, seeded") {
  std::mt19937 rng(2024);
  for (const char* label : {"A2", "B2", "G2"}) {
    const CoxeterGroup g = build_group(label);
    const MultiplicityFunction m(g, {1});
    const QuasiinvariantRing ring(g, m);
    for (unsigned j = 0; j <= 10; ++j) {
      CAPTURE(label);
      CAPTURE(j);
      const auto& slice = ring.slice(j);
      if (slice.dim() == 0) continue;
      CHECK(is_quasiinvariant(qm_test::random_element(rng, slice), g, m).holds);
    }
  }
}

TEST_CASE("coordinate reflection groups against the monomial count") {
  std::mt19937 rng(7);
  const CoxeterGroup g = build_group("(Z/2)^3");
  for (int trial = 0; trial < 6; ++trial) {
    std::uniform_int_distribution<unsigned> pick(0, 2);
    std::vector<unsigned> m{pick(rng), pick(rng), pick(rng)};
    const QuasiinvariantRing ring(g, MultiplicityFunction(g, m));
    for (unsigned j = 0; j <= 9; ++j) CHECK(ring.slice(j).dim() == static_cast<std::size_t>(z2_slice_dim(m, j)));
  }
}

TEST_CASE("Poincare series") {
  const CoxeterGroup z2 = build_group("(Z/2)^2");
  const auto p = poincare_series(z2, MultiplicityFunction(z2, {1}), 12);
  const RationalSeries expected{multiply({1, -1, 1}, {1, -1, 1}), multiply({1, -1}, {1, -1})};
  CHECK(p.coefficients == taylor_long(expected, 13));

  const CoxeterGroup a1 = build_group("A1");
  CHECK(poincare_series(a1, MultiplicityFunction(a1, {1}), 6).coefficients == std::vector<long>{1, 0, 1, 1, 1, 1, 1});

  // m = 0 gives the full polynomial ring
  const CoxeterGroup b2 = build_group("B2");
  const auto full = poincare_series(b2, MultiplicityFunction(b2, {0}), 8);
  for (unsigned j = 0; j <= 8; ++j) CHECK(full.coefficients[j] == static_cast<long>(j + 1));
}

TEST_CASE("line arrangements") {
  const auto perpendicular = QuasiinvariantRing(Arrangement::parse("1 0 : 1 ; 0 1 : 1")).poincare(12);
  const RationalSeries z2{multiply({1, -1, 1}, {1, -1, 1}), multiply({1, -1}, {1, -1})};
  CHECK(perpendicular.coefficients == taylor_long(z2, 13));
  REQUIRE(perpendicular.closed_form);
  CHECK(stanley_check(*perpendicular.closed_form, 2).holds);

  const auto skew = QuasiinvariantRing(Arrangement::parse("1 0 : 1 ; 1 1 : 1")).poincare(12);
  CHECK(skew.coefficients == std::vector<long>{1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  REQUIRE(skew.closed_form);
  CHECK(skew.closed_form_matches());
  CHECK(trim(skew.closed_form->numerator) == UniPoly{1, -2, 2});
  CHECK_FALSE(stanley_check(*skew.closed_form, 2).holds);

  const auto line = QuasiinvariantRing(Arrangement::parse("1 0 : 0")).poincare(8);
  for (unsigned j = 0; j <= 8; ++j) CHECK(line.coefficients[j] == static_cast<long>(j + 1));

  CHECK_THROWS_AS(Arrangement::parse("1 0 1"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse("1 0 : 1 ; 2 0 : 1"), Error);
  CHECK(Arrangement::parse("1 0 : 1 ; 1 1 : 2").to_string() == "1 0 : 1 ; 1 1 : 2");
}
