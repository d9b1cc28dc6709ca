#include <doctest.h>

#include "fixtures.hpp"
#include "haantjes/geometry.hpp"
#include "haantjes/random.hpp"
#include "haantjes/torsion.hpp"

using namespace haantjes;
using fixtures::P;

namespace {

VectorField vf(std::initializer_list<const char*> comps, std::size_t n) {
  VectorField v(static_cast<Eigen::Index>(comps.size()));
  Eigen::Index i = 0;
  for (const char* c : comps) v(i++) = parse_poly(c, n);
  return v;
}

}  // namespace

TEST_CASE("lie_bracket examples") {
  // [d2, d3 + x2 d4] = d4
  CHECK(lie_bracket(vf({"0", "1", "0", "0"}, 4), vf({"0", "0", "1", "x2"}, 4)) ==
        vf({"0", "0", "0", "1"}, 4));
  const auto xi = vf({"x1*x2", "x3^2", "1"}, 3);
  CHECK(lie_bracket(xi, xi) == vf({"0", "0", "0"}, 3));
  // [x1 d1, x1 d2] = x1 d2
  CHECK(lie_bracket(vf({"x1", "0"}, 2), vf({"0", "x1"}, 2)) == vf({"0", "x1"}, 2));
  CHECK_THROWS_AS(lie_bracket(vf({"x1", "0"}, 2), vf({"0", "0", "1"}, 3)), std::invalid_argument);
}

TEST_CASE("property: Lie bracket is bilinear, antisymmetric and satisfies Jacobi") {
  RandomSource rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto n = rng.integer(2, 4);
    const auto a = rng.vector_field(n, 2, 3);
    const auto b = rng.vector_field(n, 2, 3);
    const auto c = rng.vector_field(n, 2, 3);
    const Poly q = Poly(rng.nonzero_rational());
    CHECK(lie_bracket(a, b) == VectorField(-lie_bracket(b, a)));
    CHECK(lie_bracket(VectorField(a + q * c), b) ==
          VectorField(lie_bracket(a, b) + q * lie_bracket(c, b)));
    const VectorField jacobi = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                               lie_bracket(c, lie_bracket(a, b));
    for (Eigen::Index i = 0; i < n; ++i) CHECK(jacobi(i).is_zero());
  }
}

TEST_CASE("apply, compose, power, trace") {
  const OperatorField j4 = jordan_block(4, Poly::zero(4));
  CHECK(apply(j4, basis_field(4, 3, 4)) == basis_field(4, 2, 4));
  CHECK(power(j4, 0) == identity(4, 4));

  const auto ex1 = fixtures::example1();
  const OperatorField p4 = power(ex1, 4);
  for (Eigen::Index i = 0; i < p4.size(); ++i) CHECK(p4.data()[i].is_zero());
  CHECK_FALSE(power(ex1, 3)(0, 3).is_zero());

  CHECK(trace(fixtures::example5()).is_zero());
  CHECK(trace(fixtures::example2()) == P("3*x3 - 3*x2", 3));
  CHECK_THROWS_AS(compose(ex1, fixtures::example2()), std::invalid_argument);
}

TEST_CASE("traceless_part") {
  const OperatorField j45 = jordan_block(4, Poly::constant(4, 5));
  CHECK(traceless_part(j45) == jordan_block(4, Poly::zero(4)));
  CHECK(traceless_part(fixtures::example5()) == fixtures::example5());

  const auto diag = fixtures::field({{"x1", "0", "0"}, {"0", "x2", "0"}, {"0", "0", "x3"}});
  const Poly s = P("(x1 + x2 + x3)/3", 3);
  const auto expected = fixtures::field({{"x1", "0", "0"}, {"0", "x2", "0"}, {"0", "0", "x3"}});
  OperatorField shifted = expected;
  for (int i = 0; i < 3; ++i) shifted(i, i) -= s;
  CHECK(traceless_part(diag) == shifted);
}

TEST_CASE("property: trace(LM) = trace(ML) and traceless parts have zero trace") {
  RandomSource rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.integer(2, 4);
    const auto l = rng.operator_field(n, 2, 2);
    const auto m = rng.operator_field(n, 2, 2);
    CHECK(trace(compose(l, m)) == trace(compose(m, l)));
    CHECK(trace(traceless_part(l)).is_zero());
  }
}

TEST_CASE("affine changes") {
  const auto l = fixtures::example2();
  CHECK(pushforward(l, AffineChange::identity(3)) == l);

  const std::vector<Eigen::Index> perm{2, 0, 1};
  const std::vector<Eigen::Index> inv{1, 2, 0};
  const auto p = AffineChange::permutation(perm);
  const auto q = AffineChange::permutation(inv);
  CHECK(pushforward(pushforward(l, p), q) == l);

  RationalMatrix singular = RationalMatrix::Zero(2, 2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(AffineChange(singular, RationalVector::Zero(2)), std::domain_error);

  // y = 2 x: the field x1 d1 becomes y1 d1.
  RationalMatrix two = RationalMatrix::Identity(1, 1) * Rational(2);
  const AffineChange scale(two, RationalVector::Zero(1));
  VectorField v(1);
  v(0) = P("x1", 1);
  CHECK(pushforward(v, scale)(0) == P("x1", 1));
}

TEST_CASE("property: pushforward is functorial and natural for brackets") {
  RandomSource rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = rng.integer(2, 3);
    const auto l = rng.operator_field(n, 2, 2);
    const auto phi = rng.affine_change(n);
    const auto psi = rng.affine_change(n);
    CHECK(pushforward(l, phi.after(psi)) == pushforward(pushforward(l, psi), phi));
    const auto a = rng.vector_field(n, 2, 2);
    const auto b = rng.vector_field(n, 2, 2);
    CHECK(pushforward(lie_bracket(a, b), phi) ==
          lie_bracket(pushforward(a, phi), pushforward(b, phi)));
  }
}

TEST_CASE("property: Nijenhuis torsion is tensorial under affine changes") {
  RandomSource rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto l = rng.operator_field(3, 2, 2);
    const auto phi = rng.affine_change(3);
    CHECK(pushforward_tensor(nijenhuis(l), phi) == nijenhuis(pushforward(l, phi)));
  }
}
