#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "haantjes/geometry.hpp"
#include "haantjes/linalg.hpp"

namespace haantjes {

/// Pointwise check that L is a single Jordan block: with lambda = trace(L)/n,
/// rank (L - lambda Id)^k = n - k for k = 1..n at every sampled point.
/// Only a certificate at the sampled points.
struct RegularityReport {
  Poly eigenvalue;
  std::vector<RationalVector> sampled_points;
  /// rank_profile[p][k-1] = rank (L - lambda Id)^k at point p.
  std::vector<std::vector<Eigen::Index>> rank_profile;
  bool regular = true;
  /// Index of the first point with a wrong profile.
  std::optional<std::size_t> first_failure;
};

/// Throws std::invalid_argument for an empty point list or a point of the
/// wrong length.
RegularityReport regularity_check(const OperatorField& l, const std::vector<RationalVector>& points);

/// Sample points used when none are given: two fixed pseudo-random rational
/// points (the origin is deliberately not among them).
std::vector<RationalVector> default_sample_points(Eigen::Index n);

/// Determinant by cofactor expansion; fine for the small sizes used here.
Poly determinant(const OperatorField& m);

struct Distribution {
  Eigen::Index dim = 0;
  std::vector<VectorField> generators;
  /// For image flags: the columns of L^k the generators were taken from.
  std::vector<Eigen::Index> source_columns;
};

/// Span of a list of fields as a distribution (all generators kept).
Distribution span_of(std::vector<VectorField> generators);

/// Image of (L - lambda Id)^k, lambda = trace(L)/n, 1 <= k <= n - 1 (for
/// nilpotent L simply the image of L^k), generated by the lexicographically first
/// set of columns that is independent over the field of rational functions.
Distribution image_flag(const OperatorField& l, int k);

/// True if the fields are independent over the rational functions. Tries
/// the points first and falls back to symbolic minors.
bool generically_independent(const std::vector<VectorField>& fields,
                             const std::vector<RationalVector>& points = {});

struct IntegrabilityReport {
  bool integrable = true;
  /// First generator pair whose bracket leaves the distribution.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  VectorField failing_bracket;
};

/// Frobenius test: every bordered minor of [generators | [xi_a, xi_b]] is the
/// zero polynomial. The points only serve to certify independence of the
/// generators; throws std::invalid_argument if they are generically dependent.
IntegrabilityReport check_integrability(const Distribution& d,
                                        const std::vector<RationalVector>& points = {});
bool is_integrable(const Distribution& d, const std::vector<RationalVector>& points = {});

enum class VerdictKind { Triangularizable, NotTriangularizable, PreconditionViolated };
std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::PreconditionViolated;
  RegularityReport regularity;
  /// Human-readable reasons: failing sample point, nonzero components, ...
  std::vector<std::string> failing_certificates;
  std::string detail;
};

/// Triangularizability of a regular Jordan-type operator: in dimension 3 iff
/// the Haantjes torsion vanishes, in dimension 4 iff T vanishes. `points`
/// are sampled in addition to the defaults. Throws std::invalid_argument for
/// other dimensions.
Verdict verdict(const OperatorField& l, const std::vector<RationalVector>& points = {});

}  // namespace haantjes
