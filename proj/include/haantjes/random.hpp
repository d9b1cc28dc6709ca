#pragma once

#include <cstdint>
#include <random>

#include "haantjes/geometry.hpp"

namespace haantjes {

/// Seeded generator for test data. Only raw mt19937_64 output is used, so
/// the sequence is identical on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Nonzero rational with small numerator and denominator.
  Rational nonzero_rational();
  /// Sparse polynomial in `nvars` variables: up to `max_terms` terms of
  /// degree <= `degree` (involving only the first `coords` variables when
  /// coords > 0) with small nonzero rational coefficients.
  Poly poly(std::size_t nvars, int degree, int max_terms, std::size_t coords = 0);
  OperatorField operator_field(Eigen::Index dim, int degree, int max_terms);
  OperatorField strict_upper_triangular(Eigen::Index dim, int degree, int max_terms);
  VectorField vector_field(Eigen::Index dim, int degree, int max_terms);
  /// Random invertible affine change with small integer entries.
  AffineChange affine_change(Eigen::Index dim);
  RationalMatrix rational_matrix(Eigen::Index rows, Eigen::Index cols, int sparsity_percent);

 private:
  std::mt19937_64 engine_;
};

}  // namespace haantjes
