#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qm/coxeter.hpp"
#include "qm/error.hpp"

using namespace qm;
using qm_test::var;

namespace {

bool preserves_metric(const CoxeterGroup& g, std::size_t i) {
  const auto m = g.element(i);
  return m.transpose() * g.metric() * m == g.metric();
}

}  // namespace

TEST_CASE("group orders and reflection counts") {
  struct Row {
    const char* label;
    std::size_t order;
    std::size_t reflections;
  };
  for (const Row r : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6}, Row{"B2", 8, 4}, Row{"B3", 48, 9},
                      Row{"D4", 192, 12}, Row{"G2", 12, 6}, Row{"(Z/2)^2", 4, 2}, Row{"(Z/2)^3", 8, 3},
                      Row{"B2xA1", 16, 5}, Row{"I2(3)", 6, 3}, Row{"I2(4)", 8, 4}, Row{"I2(6)", 12, 6}}) {
    CAPTURE(r.label);
    const CoxeterGroup g = build_group(r.label);
    CHECK(g.order() == r.order);
    CHECK(g.reflections().size() == r.reflections);
  }
}

TEST_CASE("B6 classes") {
  const CoxeterGroup g = build_group("B6");
  CHECK(g.order() == 46080);
  CHECK(g.reflections().size() == 36);
  REQUIRE(g.num_classes() == 2);
  CHECK(g.class_names()[0] == "short");
  CHECK(g.class_sizes() == std::vector<std::size_t>{6, 30});
  const auto inv = invariant_generators(g);
  CHECK(inv.degrees == std::vector<unsigned>{2, 4, 6, 8, 10, 12});
  Polynomial p3(6);
  for (std::size_t i = 0; i < 6; ++i) p3 += var(6, i).pow(6);
  CHECK(inv.generators[2] == p3);
}

TEST_CASE("unsupported labels and caps") {
  CHECK_THROWS_AS(build_group("I2(5)"), UnsupportedType);
  CHECK_THROWS_AS(build_group("H3"), UnsupportedType);
  CHECK_THROWS_AS(build_group("nonsense"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterGroup::build("B6", 1000), OrderCapExceeded);
}

TEST_CASE("elements preserve the metric and inverses are correct") {
  for (const char* label : {"A2", "B2", "G2", "A3", "(Z/2)^3", "B2xA1"}) {
    CAPTURE(label);
    const CoxeterGroup g = build_group(label);
    CHECK(g.element(0) == Matrix<Rational>::identity(g.dim()));
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(preserves_metric(g, i));
      CHECK(g.element(i) * g.element(g.inverse_index(i)) == Matrix<Rational>::identity(g.dim()));
    }
    for (const auto& s : g.reflections()) {
      CHECK(s.matrix * s.matrix == Matrix<Rational>::identity(g.dim()));
      // s reverses its root
      CHECK(act(s.matrix, s.alpha.to_polynomial()) == -s.alpha.to_polynomial());
    }
  }
}

TEST_CASE("basic invariants") {
  CHECK(invariant_generators(build_group("A1")).degrees == std::vector<unsigned>{2});
  const auto z2 = invariant_generators(build_group("(Z/2)^2"));
  CHECK(z2.degrees == std::vector<unsigned>{2, 2});
  CHECK(z2.generators[0] == var(2, 0) * var(2, 0));
  CHECK(invariant_generators(build_group("G2")).degrees == std::vector<unsigned>{2, 6});
  CHECK(invariant_generators(build_group("D4")).degrees == std::vector<unsigned>{2, 4, 4, 6});

  for (const char* label : {"A2", "A3", "B3", "D4", "G2", "B2xA1"}) {
    CAPTURE(label);
    const CoxeterGroup g = build_group(label);
    const auto inv = invariant_generators(g);
    CHECK(algebraically_independent(inv));
    for (const auto& p : inv.generators)
      for (std::size_t i = 0; i < g.order(); ++i) CHECK(act(g, i, p) == p);
  }
}

TEST_CASE("group action on polynomials") {
  const CoxeterGroup a1 = build_group("A1");
  CHECK(act(a1, 1, var(1, 0).pow(3)) == -var(1, 0).pow(3));

  // a transposition of A2 in reduced coordinates, against direct substitution
  const CoxeterGroup a2 = build_group("A2");
  std::mt19937 rng(5);
  for (const auto& s : a2.reflections()) {
    const Polynomial f = qm_test::random_poly(rng, 2, 4);
    // s is an involution, so s.f = f o s^{-1} = f o s
    CHECK(act(s.matrix, f) == f.substitute(s.matrix));
  }
  CHECK_THROWS_AS(act(a2.element(1), var(3, 0)), DimensionMismatch);
}

TEST_CASE("multiplicity functions") {
  const CoxeterGroup b2 = build_group("B2");
  const MultiplicityFunction m(b2, {1, 0});
  CHECK_FALSE(m.is_constant());
  CHECK(m.d(b2) == 2 * 3 + 2 * 1);
  CHECK(m.delta_degree(b2) == 2);
  const MultiplicityFunction c(b2, {2});
  CHECK(c.is_constant());
  CHECK(c.values() == std::vector<unsigned>{2, 2});
  CHECK_THROWS_AS(MultiplicityFunction(b2, {1, 2, 3}), DimensionMismatch);
  CHECK(MultiplicityFunction(b2, {0}).is_zero());
}
