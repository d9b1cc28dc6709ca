#include <doctest.h>

#include "fixtures.hpp"
#include "haantjes/linalg.hpp"
#include "haantjes/poly.hpp"
#include "haantjes/random.hpp"

using namespace haantjes;
using fixtures::P;

TEST_CASE("parse: zero and canonical forms") {
  CHECK(parse_poly("0", 3).is_zero());
  CHECK(parse_poly("x1*x2 - x2*x1 + 5", 3) == Poly::constant(3, 5));
  CHECK(to_string(parse_poly("x1*x2 - x2*x1 + 5", 3)) == "5");

  const auto p = parse_poly("44*x1^2 - 16*x1*x2 + 43*x2 + 45*x3", 3);
  CHECK(p.size() == 4);
  CHECK(to_string(p) == "44*x1^2 - 16*x1*x2 + 43*x2 + 45*x3");

  CHECK(to_string(parse_poly("x3 + x1 + x2^2", 3)) == "x2^2 + x1 + x3");
  CHECK(to_string(parse_poly("-(x1 - 1)^2/2", 2)) == "-1/2*x1^2 + x1 - 1/2");
  CHECK(to_string(parse_poly("3/4*x2 - 2/6", 2)) == "3/4*x2 - 1/3");
}

TEST_CASE("parse: errors carry positions") {
  try {
    parse_poly("x1 + * x2", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  try {
    parse_poly("x1 + x4", 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_poly("x0", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("(x1 + 1", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 / x2", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^-1", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("y1", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("", 3), ParseError);
}

TEST_CASE("ring operations") {
  CHECK(P("x1 + x2", 2) + P("-x2", 2) == P("x1", 2));
  CHECK(P("x1 + 1", 2) * P("x1 - 1", 2) == P("x1^2 - 1", 2));
  CHECK(-P("x1 - 2", 1) == P("2 - x1", 1));
  CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), std::invalid_argument);
  // Free constants adopt the other ring.
  CHECK((Poly(3) + P("x1", 2)).nvars() == 2);
  CHECK(Poly(0) == Poly::zero(4));
  CHECK(Poly(2) == Poly::constant(3, 2));

  const auto l = fixtures::example2();
  const Poly tr = l(0, 0) + l(1, 1) + l(2, 2);
  CHECK(tr == P("3*x3 - 3*x2", 3));
}

TEST_CASE("diff and evaluate") {
  CHECK(diff(P("x1^2*x2 + 3*x2", 2), 0) == P("2*x1*x2", 2));
  CHECK(diff(P("x2^3", 2), 1) == P("3*x2^2", 2));
  CHECK(diff(P("x3", 3), 2) == Poly::constant(3, 1));
  CHECK_THROWS_AS(diff(P("x1", 2), 2), std::out_of_range);

  const std::vector<Rational> pt{2, 3};
  CHECK(evaluate(P("x1^2 + x2", 2), pt) == 7);
  CHECK(evaluate(Poly::zero(2), pt) == 0);
  CHECK_THROWS_AS(evaluate(P("x1", 3), pt), std::invalid_argument);

  const auto l = fixtures::example5();
  Poly tr;
  for (int i = 0; i < 4; ++i) tr += l(i, i);
  const std::vector<Rational> ones(4, Rational(1));
  CHECK(evaluate(tr, ones) == 0);
}

TEST_CASE("substitute and compose") {
  const auto p = P("x1^2*x2 + x3", 3);
  CHECK(substitute(p, {{0, Rational(2)}}) == P("4*x2 + x3", 3));
  const std::vector<Poly> images{P("x2", 3), P("x1 + 1", 3), P("x3", 3)};
  CHECK(compose(p, images) == P("x2^2*x1 + x2^2 + x3", 3));
}

TEST_CASE("row_reduce") {
  const RationalMatrix id = RationalMatrix::Identity(3, 3);
  auto e = row_reduce(id);
  CHECK(e.rank() == 3);
  CHECK(e.rref == id);

  const RationalMatrix z = RationalMatrix::Zero(2, 4);
  e = row_reduce(z);
  CHECK(e.rank() == 0);
  CHECK(e.rref == z);

  // 3 a^3_{1;2} - 3 a^3_{2;1} over the 27 unknowns a^i_{j;k} of dimension 3.
  RationalMatrix h = RationalMatrix::Zero(1, 27);
  h(0, (2 * 3 + 0) * 3 + 1) = 3;
  h(0, (2 * 3 + 1) * 3 + 0) = -3;
  e = row_reduce(h);
  CHECK(e.rank() == 1);
  CHECK(e.rref(0, 19) == 1);
  CHECK(e.rref(0, 21) == -1);

  RationalMatrix m(2, 3);
  m << 0, 2, 4, 1, 1, 1;
  e = row_reduce(m);
  RationalMatrix expected(2, 3);
  expected << 1, 0, -1, 0, 1, 2;
  CHECK(e.rref == expected);
  CHECK(e.pivots == std::vector<Eigen::Index>{0, 1});
}

TEST_CASE("nullspace and inverse") {
  RationalMatrix m(2, 3);
  m << 1, 2, 3, 2, 4, 7;
  const auto ns = nullspace(m);
  CHECK(ns.cols() == 1);
  CHECK(RationalMatrix(m * ns) == RationalMatrix::Zero(2, 1));

  RationalMatrix a(2, 2);
  a << 2, 1, 1, 1;
  CHECK(RationalMatrix(a * inverse(a)) == RationalMatrix::Identity(2, 2));
  RationalMatrix s(2, 2);
  s << 1, 2, 2, 4;
  CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("rowspace comparisons") {
  RationalMatrix m(3, 4);
  m << 1, 2, 0, 1, 0, 1, 1, 0, 1, 3, 1, 1;
  RationalMatrix perm(3, 4);
  perm << m.row(2), m.row(0), m.row(1);
  CHECK(rowspace_equal(m, perm));
  CHECK(rowspace_contains(m, RationalMatrix(m.topRows(1))));
  CHECK_FALSE(rowspace_equal(m, RationalMatrix(m.topRows(1))));
  CHECK_THROWS_AS(rowspace_equal(m, RationalMatrix::Zero(1, 3)), std::invalid_argument);
}

TEST_CASE("property: ring axioms and Leibniz rule") {
  RandomSource rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = rng.poly(3, 3, 4);
    const auto q = rng.poly(3, 3, 4);
    const auto r = rng.poly(3, 2, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    const auto k = static_cast<std::size_t>(rng.integer(0, 2));
    CHECK(diff(p * q, k) == diff(p, k) * q + p * diff(q, k));
  }
}

TEST_CASE("property: parse inverts print") {
  RandomSource rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rng.poly(4, 4, 6);
    CHECK(parse_poly(to_string(p), 4) == p);
  }
}

TEST_CASE("property: rank of transpose") {
  RandomSource rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rows = rng.integer(1, 12);
    const auto cols = rng.integer(1, 40);
    RationalMatrix m = rng.rational_matrix(rows, cols, static_cast<int>(rng.integer(0, 90)));
    // Force some dependency.
    if (rows > 2) m.row(rows - 1) = m.row(0) * Rational(3) - m.row(1);
    CHECK(rank(m) == rank(RationalMatrix(m.transpose())));
  }
}

TEST_CASE("property: rowspace_equal is an equivalence relation") {
  RandomSource rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalMatrix a = rng.rational_matrix(4, 7, 50);
    RationalMatrix mix = rng.rational_matrix(4, 4, 0);
    while (rank(mix) < 4) mix = rng.rational_matrix(4, 4, 0);
    RationalMatrix mix2 = rng.rational_matrix(4, 4, 0);
    while (rank(mix2) < 4) mix2 = rng.rational_matrix(4, 4, 0);
    const RationalMatrix b = mix * a;
    const RationalMatrix c = mix2 * b;
    CHECK(rowspace_equal(a, a));
    CHECK(rowspace_equal(a, b) == rowspace_equal(b, a));
    CHECK(rowspace_equal(a, b));
    CHECK(rowspace_equal(b, c));
    CHECK(rowspace_equal(a, c));
    const RationalMatrix other = rng.rational_matrix(4, 7, 50);
    CHECK(rowspace_equal(a, other) == rowspace_equal(other, a));
  }
}
