#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qm/echelon.hpp"
#include "qm/error.hpp"
#include "qm/fraction.hpp"
#include "qm/linalg.hpp"
#include "qm/linear_form.hpp"
#include "qm/rational_op.hpp"
#include "qm/series.hpp"

using namespace qm;
using qm_test::cst;
using qm_test::var;

namespace {

LinearForm coordinate(std::size_t n, std::size_t i) {
  std::vector<Rational> c(n, Rational(0));
  c[i] = 1;
  return LinearForm(std::move(c));
}

// d^2 - (2/x) d in one variable
RationalOp rank_one_m() {
  RationalOp op(1);
  op.add_term(Fraction(cst(1, 1)), Monomial{2});
  op.add_term(Fraction(cst(1, -2), {LinearFormPower{coordinate(1, 0), 1}}), Monomial{1});
  return op;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(binomial(6, 2) == 15);
  CHECK(factorial(5) == 120);
}

TEST_CASE("polynomial arithmetic and canonical text") {
  const auto x1 = var(2, 0), x2 = var(2, 1);
  const Polynomial f = x1 * x1 * x2 * Rational(2) - x2 * Rational(1, 3);
  CHECK(f.to_string() == "2*x1^2*x2 - 1/3*x2");
  CHECK(f.degree() == 3);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.homogeneous_component(1) == x2 * Rational(-1, 3));
  CHECK((f - f).is_zero());
  CHECK(var(1, 0).pow(3).to_string() == "x^3");
  CHECK(f.derivative(0) == x1 * x2 * Rational(4));
  CHECK(f.embed(4, 2) == var(4, 2) * var(4, 2) * var(4, 3) * Rational(2) - var(4, 3) * Rational(1, 3));
}

TEST_CASE("substitution applies f(Mx)") {
  const auto x = var(2, 0), y = var(2, 1);
  const Matrix<Rational> swap{{0, 1}, {1, 0}};
  CHECK((x * x * y).substitute(swap) == y * y * x);
  const Matrix<Rational> flip{{-1, 0}, {0, 1}};
  CHECK((x * x * x).substitute(flip) == -(x * x * x));
}

TEST_CASE("exact division by a linear form") {
  const auto x = var(2, 0), y = var(2, 1);
  const LinearForm lx = coordinate(2, 0);
  CHECK(exact_divide(x.pow(3) * y + x * x * y * y, lx) == x * x * y + x * y * y);
  CHECK_THROWS_AS(exact_divide(x * x + cst(2, 1), lx), NotDivisible);

  // x^3 - s(x^3) with s: x -> -x, divided by x three times
  const auto x1 = var(1, 0);
  Polynomial rest = x1.pow(3) - x1.pow(3).substitute(Matrix<Rational>{{-1}});
  for (int k = 0; k < 3; ++k) rest = exact_divide(rest, coordinate(1, 0));
  CHECK(rest == cst(1, 2));
}

TEST_CASE("multivariate exact division, seeded") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = qm_test::random_poly(rng, 3, 4);
    Polynomial g = qm_test::random_poly(rng, 3, 2);
    if (g.is_zero()) continue;
    CHECK(divide_exact(f * g, g) == f);
    // Leibniz rule
    CHECK((f * g).derivative(1) == f.derivative(1) * g + f * g.derivative(1));
  }
  CHECK_THROWS_AS(divide_exact(var(2, 0) + cst(2, 1), var(2, 1)), NotDivisible);
}

TEST_CASE("fractions render and reduce") {
  const Fraction f(cst(1, -2), {LinearFormPower{coordinate(1, 0), 1}});
  CHECK(f.to_string() == "-2/x");
  Fraction g(var(1, 0) * var(1, 0), {LinearFormPower{coordinate(1, 0), 1}});
  g.reduce();
  CHECK_FALSE(g.has_denominator());
  CHECK(g.to_polynomial() == var(1, 0));
}

TEST_CASE("rational operator application") {
  const RationalOp m = rank_one_m();
  const auto x = var(1, 0);
  CHECK(m.apply(x.pow(3)).is_zero());
  CHECK(m.apply(x * x) == cst(1, -2));
  CHECK_THROWS_AS(m.apply(x), NonPolynomialResult);
  CHECK(m.to_string() == "(1)*∂x^2 + (-2/x)*∂x");
}

TEST_CASE("composition and commutators") {
  const RationalOp m = rank_one_m();
  const auto x = var(1, 0);
  // [M, x^2] = 4 x d - 2
  RationalOp expected(1);
  expected.add_term(Fraction(x * Rational(4)), Monomial{1});
  expected.add_term(Fraction(cst(1, -2)), Monomial{0});
  CHECK(commutator(m, RationalOp::multiplication(x * x)) == expected);

  // s o d = -d o s
  const Matrix<Rational> s{{-1}};
  const RationalOp d = RationalOp::derivative(1, Monomial{1});
  const RationalOp w = RationalOp::group_element(s);
  CHECK(w * d == (d * w) * Rational(-1));
  CHECK((w * w) == RationalOp::identity(1));
}

TEST_CASE("composition agrees with sequential application, seeded") {
  std::mt19937 rng(99);
  const RationalOp m = rank_one_m();
  const RationalOp xd = RationalOp::multiplication(var(1, 0)) * RationalOp::derivative(1, Monomial{1});
  const RationalOp prod = m * xd;
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = qm_test::random_poly(rng, 1, 7);
    // drop the linear term so that M f stays polynomial
    f -= var(1, 0) * f.coefficient(Monomial{1});
    CHECK(prod.apply(f) == m.apply(xd.apply(f)));
  }
}

TEST_CASE("principal symbol") {
  // (x, xi) with xi at offset 1
  CHECK(rank_one_m().principal_symbol() == var(2, 1).pow(2));
  const Polynomial q = var(1, 0).pow(3) + cst(1, 1);
  CHECK(RationalOp::multiplication(q).principal_symbol() == q.embed(2, 0));
  CHECK(rank_one_m().is_homogeneous_of_degree(-2));
}

TEST_CASE("dense linear algebra") {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < 3; ++j) v += a(i, j) * ns[0][j];
    CHECK(v == 0);
  }
  RatMatrix b{{2, 1}, {1, 1}};
  CHECK(determinant(b) == 1);
  const RatMatrix bi = inverse(b);
  CHECK(bi(0, 0) == 1);
  CHECK(bi(0, 1) == -1);
  CHECK(is_symmetric(b));
  CHECK_THROWS_AS(inverse(a), SingularGram);
}

TEST_CASE("symbolic determinant") {
  const auto k = var(1, 0);
  const auto k3 = k.pow(3);
  CHECK(polynomial_determinant({{cst(1, 1), cst(1, 1)}, {k3, -k3}}) == k3 * Rational(-2));
  CHECK(polynomial_determinant({{cst(1, 1), cst(1, 1)}, {k, -k}}) == k * Rational(-2));
}

TEST_CASE("echelon spans") {
  const auto x = var(2, 0), y = var(2, 1);
  const EchelonSpan s = EchelonSpan::of(2, {x * x + y * y, x * x - y * y, x * y + x * x});
  CHECK(s.dim() == 3);
  const EchelonSpan t = EchelonSpan::of(2, {x + y, x - y, x * Rational(2)});
  CHECK(t.dim() == 2);
  CHECK(t.contains(y));
  CHECK_FALSE(t.contains(x * y));
  const auto coords = t.coordinates(x * Rational(3) + y);
  REQUIRE(coords);
  CHECK(t.combination(*coords) == x * Rational(3) + y);
}

TEST_CASE("univariate series") {
  // ((1 - t + t^2) / (1 - t))^2
  const UniPoly n = multiply({1, -1, 1}, {1, -1, 1});
  const RationalSeries s{n, multiply({1, -1}, {1, -1})};
  const auto c = s.taylor(8);
  const std::vector<Rational> expected{1, 0, 2, 2, 3, 4, 5, 6};
  CHECK(c == expected);
  CHECK(stanley_check(s, 2).holds);
  CHECK_FALSE(stanley_check(RationalSeries{{1, -2, 2}, {1, -2, 1}}, 2).holds);

  const auto fit = fit_closed_form({1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 2);
  REQUIRE(fit);
  CHECK(trim(fit->numerator) == UniPoly{1, -2, 2});
  CHECK_FALSE(fit_closed_form({1, 1, 2, 3, 5, 8, 13, 21, 34}, 2));
}
