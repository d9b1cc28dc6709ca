// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "fixtures.hpp"
#include "haantjes/linearizer.hpp"
#include "haantjes/random.hpp"
#include "haantjes/structure.hpp"
#include "haantjes/torsion.hpp"

using namespace haantjes;
using fixtures::P;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

RationalVector point(std::initializer_list<int> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

// Reference formulas for the Haantjes torsion of the field with superdiagonal
// (a, b, c). They are stated for H^i_{jk} with the lower indices in the
// opposite order to our components, so entry (i, j, k) here is compared
// with our (i, k, j).
Tensor12 reference_haantjes(const Poly& a, const Poly& b, const Poly& c) {
  Tensor12 h(4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      for (Eigen::Index k = 0; k < 4; ++k) h(i, k, j) = Poly::zero(4);
  const Poly w = b * diff(c, 0) - diff(b, 0) * c;
  const Poly h1_42 = Poly(2) * a * a * w;
  const Poly h1_34 = b * (diff(a, 1) * b * c + diff(b, 1) * a * c - Poly(2) * a * b * diff(c, 1));
  const Poly h2_34 = a * b * w;
  h(0, 1, 3) = h1_42;   // H^1_{42}
  h(0, 3, 1) = -h1_42;  // H^1_{24}
  h(0, 3, 2) = h1_34;   // H^1_{34}
  h(0, 2, 3) = -h1_34;
  h(1, 3, 2) = h2_34;   // H^2_{34}
  h(1, 2, 3) = -h2_34;
  return h;
}

Outcome criterion1() {
  Outcome o;
  const auto l = fixtures::example1();
  o.require(torsion_level(l, 3).is_zero(), "level-3 torsion nonzero");
  o.require(!is_integrable(image_flag(l, 1)), "image of L reported integrable");
  o.require(verdict(l).kind == VerdictKind::NotTriangularizable, "verdict is not NotTriangularizable");
  o.require(!tensor_t(l).is_zero(), "T vanishes");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto l = fixtures::example2();
  const auto r = regularity_check(l, {point({1, 1, 1}), point({2, -1, 3}), point({-3, 5, 1})});
  o.require(r.regular, "rank profile is not a single Jordan block");
  o.require(r.eigenvalue == P("x3 - x2", 3), "eigenvalue is " + to_string(r.eigenvalue));
  o.require(torsion_level(l, 2).is_zero(), "Haantjes torsion nonzero");
  o.require(verdict(l).kind == VerdictKind::Triangularizable, "verdict is not Triangularizable");
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(!torsion_level(fixtures::example3(), 2).is_zero(), "Haantjes torsion vanishes");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto check = [&](const char* a, const char* b, const char* c) -> Tensor12 {
    const auto l = fixtures::example4(a, b, c);
    const Tensor12 h = haantjes_torsion(l);
    const Tensor12 ref = reference_haantjes(P(a, 4), P(b, 4), P(c, 4));
    o.require(h == ref, std::string("components differ for a=") + a + ", b=" + b + ", c=" + c);
    o.require(tensor_t(l).is_zero(), "T nonzero");
    return h;
  };
  const Tensor12 first = check("x1", "x2", "x3");
  o.require(first(0, 1, 3).is_zero(), "H^1_{42} nonzero for a=x1, b=x2, c=x3");
  const Tensor12 second = check("x2", "x1*x2", "x1");
  o.require(second(0, 3, 2) == P("2*x1^3*x2^2", 4), "H^1_{34} is not 2*x1^3*x2^2 for a=x2, b=x1*x2, c=x1");
  o.note = o.pass ? "lower indices of the reference table transposed" : o.note;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto l = fixtures::example5();
  o.require(!torsion_level(l, 2).is_zero(), "Haantjes torsion vanishes");
  o.require(tensor_t(l).is_zero(), "T nonzero");
  o.require(verdict(l).kind == VerdictKind::Triangularizable, "verdict is not Triangularizable");
  o.require(trace(l).is_zero(), "trace nonzero");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto op = build_linearized(3);
  const auto sys = extract_system(tensor_at_origin(op, TensorChoice::parse("haantjes")), op.layout, "H");
  o.require(sys.rank() == 1, "rank " + std::to_string(sys.rank()));
  RationalMatrix expected = RationalMatrix::Zero(1, static_cast<Eigen::Index>(op.layout.unknowns()));
  expected(0, op.layout.column(op.layout.a(2, 0, 1))) = 3;
  expected(0, op.layout.column(op.layout.a(2, 1, 0))) = -3;
  o.require(rowspace_equal(sys.matrix, expected), "row is not 3*a3_12 - 3*a3_21");
  o.require(rowspace_equal(sys.matrix, cond3_system(3).matrix), "not equal to the integrability system");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto op = build_linearized(4);
  const auto& lay = op.layout;
  const auto t = extract_system(tensor_at_origin(op, TensorChoice::parse("t")), lay, "T");
  const auto cond = cond3_system(4);

  const auto row = [&](std::initializer_list<std::pair<std::array<int, 3>, int>> terms) {
    RationalVector r = RationalVector::Zero(static_cast<Eigen::Index>(lay.unknowns()));
    for (const auto& [idx, coeff] : terms) r(lay.column(lay.a(idx[0] - 1, idx[1] - 1, idx[2] - 1))) += coeff;
    return r;
  };
  const std::vector<std::pair<std::vector<std::string>, RationalVector>> table{
      {{"T^1_{24}", "T^1_{42}"}, row({{{4, 1, 2}, -2}, {{4, 2, 1}, 2}})},
      {{"T^1_{33}"}, row({{{4, 1, 2}, 4}, {{4, 2, 1}, -4}})},
      {{"T^1_{34}"}, row({{{3, 1, 2}, -1}, {{4, 3, 1}, -2}, {{3, 2, 1}, 1}, {{4, 1, 3}, 2}})},
      {{"T^1_{43}"}, row({{{3, 1, 2}, 1}, {{4, 3, 1}, -2}, {{3, 2, 1}, -1}, {{4, 1, 3}, 2}})},
      {{"T^1_{44}"}, row({{{4, 3, 2}, -4}, {{4, 2, 3}, 4}})},
      {{"T^2_{34}", "T^2_{43}"}, row({{{4, 1, 2}, -1}, {{4, 2, 1}, 1}})},
  };
  std::size_t matched = 0;
  for (const auto& [labels, expected] : table) {
    for (const auto& label : labels) {
      Eigen::Index r = -1;
      for (std::size_t i = 0; i < t.row_labels.size(); ++i)
        if (t.row_labels[i] == label) r = static_cast<Eigen::Index>(i);
      if (r < 0) {
        o.require(false, label + " missing");
        continue;
      }
      RationalMatrix pair(2, expected.size());
      pair.row(0) = t.matrix.row(r);
      pair.row(1) = expected.transpose();
      o.require(rank(pair) == 1, label + " is not a multiple of the listed expression");
      ++matched;
    }
  }
  o.require(matched == static_cast<std::size_t>(t.matrix.rows()), "extra nonzero T components");
  o.require(t.rank() == 4, "T rank " + std::to_string(t.rank()));
  o.require(rowspace_equal(t.matrix, cond.matrix), "T system differs from the integrability system");

  const auto h = extract_system(tensor_at_origin(op, TensorChoice::parse("haantjes")), lay);
  o.require(h.rank() == 6, "H rank " + std::to_string(h.rank()));
  o.require(rowspace_contains(h.matrix, cond.matrix) && !rowspace_equal(h.matrix, cond.matrix),
            "H system does not strictly contain the integrability system");
  const auto h3 = extract_system(tensor_at_origin(op, TensorChoice::parse("level:3")), lay);
  o.require(h3.rank() == 2, "level-3 rank " + std::to_string(h3.rank()));
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::uint64_t seed = 1000;
  for (int n = 3; n <= 5; ++n) {
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto [k, l] = commuting_triangular_pair(n, seed++, 2);
      if (!fn_bracket_level(k, l, n - 1).is_zero()) ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " failures for n = " + std::to_string(n));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  RandomSource rng(2000);
  for (int n = 3; n <= 5; ++n) {
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial)
      if (!torsion_level(rng.strict_upper_triangular(n, 2, 2), n - 1).is_zero()) ++failures;
    o.require(failures == 0, std::to_string(failures) + " failures for n = " + std::to_string(n));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  RandomSource rng(3000);
  int failures = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index n = trial % 2 == 0 ? 3 : 4;
    const auto l = rng.operator_field(n, 1, 2);
    const auto phi = rng.affine_change(n);
    const Poly lambda = rng.poly(static_cast<std::size_t>(n), 2, 3);
    OperatorField shifted = l;
    for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += lambda;

    const auto h = haantjes_torsion(l);
    bool ok = pushforward_tensor(h, phi) == haantjes_torsion(pushforward(l, phi));
    ok = ok && haantjes_torsion(shifted) == h;
    if (n == 4) {
      const auto t = tensor_t(l);
      ok = ok && pushforward_tensor(t, phi) == tensor_t(pushforward(l, phi));
      ok = ok && tensor_t(shifted) == t;
    }
    if (!ok) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " of 25 triples fail");
  return o;
}

Outcome criterion11() {
  Outcome o;
  RationalVector c(3);
  c << 1, -1, 1;
  const auto r = search_tensor(4, tensor_t_candidates());
  o.require(r.contains(c), "(1, -1, 1) not in the admissible space");
  o.require(assess_combination(4, tensor_t_candidates(), c).equivalent,
            "(1, -1, 1) not equivalent to the integrability system");
  return o;
}

Outcome criterion12() {
  Outcome o;
  const RationalVector origin = point({0, 0});
  for (const auto& [name, l] : {std::pair{"A", fixtures::dim2_a()}, std::pair{"B", fixtures::dim2_b()}}) {
    o.require(nijenhuis(l).is_zero(), std::string("Nijenhuis torsion of ") + name + " nonzero");
    o.require(!regularity_check(l, {origin}).regular, std::string("origin not flagged for ") + name);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"ex1: level-3 torsion zero, image not integrable, not triangularizable, T nonzero", criterion1},
      {"ex2: Jordan profile with eigenvalue x3 - x2, H = 0, triangularizable", criterion2},
      {"ex3: Haantjes torsion nonzero", criterion3},
      {"ex4: Haantjes components match the formulas, T = 0", criterion4},
      {"ex5: H nonzero, T = 0, triangularizable, trace 0", criterion5},
      {"linearized dim 3: H system rank 1, equal to the integrability system", criterion6},
      {"linearized dim 4: T table, ranks of T / H / level 3 systems", criterion7},
      {"commuting triangular pairs: level n-1 bracket vanishes (300 pairs)", criterion8},
      {"strictly triangular fields: level n-1 torsion vanishes (150 fields)", criterion9},
      {"tensoriality and eigenvalue-shift invariance of H and T (25 triples)", criterion10},
      {"search over the T index patterns contains (1, -1, 1), equivalent", criterion11},
      {"dimension 2: N(A) = N(B) = 0, origin flagged as degenerate", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.note.empty()) std::cout << " [" << o.note << "]";
    std::cout << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
