#pragma once

#include <cstdint>
#include <utility>

#include "haantjes/geometry.hpp"

namespace haantjes {

/// Nijenhuis torsion
///   N(u, v) = L^2 [u, v] + [Lu, Lv] - L [Lu, v] - L [u, Lv]
/// evaluated on coordinate fields: component (i, j, k) is N(d_j, d_k)^i.
Tensor12 nijenhuis(const OperatorField& l);

/// One step of the Haantjes recursion:
///   S'(u, v) = L^2 S(u, v) + S(Lu, Lv) - L S(Lu, v) - L S(u, Lv).
Tensor12 haantjes_step(const OperatorField& l, const Tensor12& previous);

/// Level-m torsion: level 1 is nijenhuis(l), level 2 the Haantjes torsion.
/// Throws std::invalid_argument for m < 1.
Tensor12 torsion_level(const OperatorField& l, int m);

/// Level-m torsion built from an already computed Nijenhuis torsion. Only
/// algebraic operations are applied to `base`, so the result commutes with
/// substituting values for variables.
Tensor12 torsion_level_from(const OperatorField& l, const Tensor12& base, int m);

/// Haantjes torsion, torsion_level(l, 2).
inline Tensor12 haantjes_torsion(const OperatorField& l) { return torsion_level(l, 2); }

/// Frolicher-Nijenhuis bracket [[K, L]] of two operator fields.
Tensor12 fn_bracket(const OperatorField& k, const OperatorField& l);

/// One step of the eight-term generalized bracket recursion.
Tensor12 fn_bracket_step(const OperatorField& k, const OperatorField& l, const Tensor12& previous);

/// Level-m generalized Haantjes bracket; level 1 is fn_bracket(k, l).
Tensor12 fn_bracket_level(const OperatorField& k, const OperatorField& l, int m);

struct TensorTOptions {
  /// Allow dimensions other than 4, using the trace/n normalisation of the
  /// traceless part. Experimental.
  bool force = false;
};

/// T^i_{jk} = Lh^i_s H^s_{rk} Lh^r_j - Lh^i_s H^s_{jr} Lh^r_k + H^i_{sk} Lh^s_r Lh^r_j
/// with H the Haantjes torsion and Lh the traceless part of L. Defined for
/// dimension 4; other dimensions throw std::invalid_argument unless forced.
Tensor12 tensor_t(const OperatorField& l, TensorTOptions options = {});

/// The same contraction pattern applied to given Lh and H.
Tensor12 tensor_t_from(const OperatorField& traceless, const Tensor12& haantjes);

/// Two strictly upper triangular, pointwise commuting operator fields
/// K = sum_i p_i N^i and L = sum_i q_i N^i, where N is a random strictly
/// upper triangular polynomial matrix and p_i, q_i are random polynomials.
/// Every entry of K and L has degree <= `degree`. Deterministic in `seed`.
std::pair<OperatorField, OperatorField> commuting_triangular_pair(int n, std::uint64_t seed,
                                                                  int degree);

}  // namespace haantjes
