#pragma once

#include <string>
#include <vector>

#include "haantjes/geometry.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<std::string>>;

inline haantjes::OperatorField field(const Rows& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  haantjes::OperatorField l(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      l(i, j) = haantjes::parse_poly(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                     static_cast<std::size_t>(n));
  return l;
}

// Nilpotent, Jordan-block-like, zero level-3 torsion, non-integrable image.
inline haantjes::OperatorField example1() {
  return field({{"0", "1", "0", "0"},
                {"0", "0", "1", "0"},
                {"0", "0", "-x2", "1"},
                {"0", "0", "-x2^2", "x2"}});
}

// 3x3 Jordan block with eigenvalue x3 - x2, zero Haantjes torsion.
inline haantjes::OperatorField example2() {
  return field({{"44*x1^2 - 16*x1*x2 + 43*x2 + 45*x3", "66*x1^2 - 20*x1*x2 + 66*x2 + 66*x3",
                 "55*x1^2 - 24*x1*x2 + 55*x2 + 55*x3"},
                {"-16*x1^2 + 8*x1*x2 - 16*x2 - 16*x3", "-24*x1^2 + 10*x1*x2 - 25*x2 - 23*x3",
                 "-20*x1^2 + 12*x1*x2 - 20*x2 - 20*x3"},
                {"-16*x1^2 + 4*x1*x2 - 16*x2 - 16*x3", "-24*x1^2 + 5*x1*x2 - 24*x2 - 24*x3",
                 "-20*x1^2 + 6*x1*x2 - 21*x2 - 19*x3"}});
}

// Upper triangular with distinct diagonal entries; Haantjes torsion nonzero.
inline haantjes::OperatorField example3() {
  return field({{"x1", "x2", "0"}, {"0", "x2", "x2"}, {"0", "0", "x3"}});
}

// Strictly upper triangular with superdiagonal (a, b, c).
inline haantjes::OperatorField example4(const std::string& a, const std::string& b,
                                        const std::string& c) {
  return field({{"0", a, "0", "0"}, {"0", "0", b, "0"}, {"0", "0", "0", c}, {"0", "0", "0", "0"}});
}

// Nilpotent 4x4 with nonzero Haantjes torsion but vanishing T.
inline haantjes::OperatorField example5() {
  return field({{"-x1 - x3 - x2", "-2*x2 - x3", "-x1 - 3*x2 - 2*x3", "-2*x2 - x3"},
                {"3*x3 + x2 + 2*x1", "3*x3 + 2*x2 + x1", "5*x3 + 4*x2 + 3*x1", "3*x3 + 2*x2 + x1"},
                {"0", "-x1 + x2", "-x1 + x2", "-x1 + x2"},
                {"-2*x3 - x1", "-2*x3 - 2*x2 + x1", "-3*x3 - 3*x2", "-2*x3 - 2*x2 + x1"}});
}

// Pointwise diagonalisable, eigenvalues collide at the origin.
inline haantjes::OperatorField dim2_a() { return field({{"2*x1", "x2"}, {"x2", "0"}}); }

// Nilpotent, rank drops at the origin.
inline haantjes::OperatorField dim2_b() {
  return field({{"x1*x2", "-x2^2"}, {"x1^2", "-x1*x2"}});
}

inline haantjes::Poly P(const std::string& text, std::size_t nvars) {
  return haantjes::parse_poly(text, nvars);
}

}  // namespace fixtures
