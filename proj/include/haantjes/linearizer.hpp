#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "haantjes/geometry.hpp"
#include "haantjes/linalg.hpp"

namespace haantjes {

/// Variable layout of a linearized operator in dimension n:
///   x_1..x_n                 coordinates
///   a^i_{j;k}, i,j,k = 1..n  lexicographic in (i, j, k)
///   lambda_1..lambda_n       only with eigenvalue data
///   lambda_0                 only with eigenvalue data
/// Unknown columns of extracted systems follow the same order (the a's,
/// then the lambda_k); lambda_0 is never an unknown.
class ParamLayout {
 public:
  explicit ParamLayout(Eigen::Index n, bool with_eigenvalue = false);

  Eigen::Index dim() const noexcept { return n_; }
  bool with_eigenvalue() const noexcept { return eigen_; }
  std::size_t nvars() const;
  std::size_t unknowns() const;

  /// All indices are 0-based.
  std::size_t x(Eigen::Index k) const { return static_cast<std::size_t>(k); }
  std::size_t a(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return static_cast<std::size_t>(n_ + (i * n_ + j) * n_ + k);
  }
  std::size_t lambda(Eigen::Index k) const;
  std::size_t lambda0() const;

  /// Column of an unknown variable, or -1 for coordinates and lambda_0.
  Eigen::Index column(std::size_t var) const;

  /// Printable names: x1.., a4_12 for a^4_{1;2}, lambda1.., lambda0.
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::string> unknown_names() const;

 private:
  Eigen::Index n_;
  bool eigen_;
  std::vector<std::string> names_;
};

/// First-order model of a Jordan-type operator near the origin,
///   L(x) = J_n(0) - A(x) J_n(0) + J_n(0) A(x),   A^i_j = sum_k a^i_{j;k} x_k,
/// optionally plus (lambda_0 + sum_k lambda_k x_k) Id.
struct ParamOperator {
  OperatorField field;
  ParamLayout layout;
};

ParamOperator build_linearized(Eigen::Index n, bool with_eigenvalue = false);

/// Which tensor to extract a system from.
struct TensorChoice {
  enum class Kind { Nijenhuis, Level, T };
  Kind kind = Kind::Level;
  int level = 2;

  /// Parses "nijenhuis", "haantjes", "level:m" or "t".
  static TensorChoice parse(const std::string& text);
  std::string name() const;
};

/// Tensor of the linearized operator evaluated at x = 0. The Nijenhuis
/// torsion is computed symbolically and restricted to the origin before the
/// purely algebraic recursion, which commutes with the restriction. For T
/// any dimension is accepted (trace/n normalisation).
Tensor12 tensor_at_origin(const ParamOperator& op, const TensorChoice& choice);

/// Value of L and its Nijenhuis torsion at the origin.
struct OriginJet {
  OperatorField value;
  Tensor12 nijenhuis;
  Tensor12 haantjes;
};
OriginJet origin_jet(const ParamOperator& op);

/// Thrown when a component at x = 0 is not a homogeneous linear form in the
/// unknowns.
class NonlinearSystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LinearSystemQ {
  RationalMatrix matrix;
  /// One label per row, e.g. "T^1_{24}".
  std::vector<std::string> row_labels;
  /// 0-based (i, j, k) component of each row.
  std::vector<std::array<Eigen::Index, 3>> components;
  std::vector<std::string> unknown_names;

  Eigen::Index rank() const { return haantjes::rank(matrix); }
  /// "3*a3_12 - 3*a3_21" for row r.
  std::string equation(Eigen::Index r) const;
};

/// One row per component of `s` (after setting the coordinates to 0) that
/// has a nonzero coefficient. `symbol` names the tensor in row labels.
LinearSystemQ extract_system(const Tensor12& s, const ParamLayout& layout,
                             const std::string& symbol = "S");

/// Same, but keeps all n^3 component rows, zero or not.
RationalMatrix component_matrix(const Tensor12& s, const ParamLayout& layout);

/// Rows a^k_{i;j} - a^k_{j;i} for 1 <= i < j < k <= n. Throws for n < 3.
LinearSystemQ cond3_system(Eigen::Index n);
LinearSystemQ cond3_system(const ParamLayout& layout);

/// A tensor built algebraically from the traceless part, the Nijenhuis
/// torsion and the Haantjes torsion.
struct Candidate {
  std::string name;
  std::function<Tensor12(const OperatorField& lhat, const Tensor12& nij, const Tensor12& haantjes)>
      build;
};

/// upper(Lh^p, B(Lh^q ., Lh^r .)) for B in {N, H} and p + q + r <= 2,
/// ordered by B (N first), then by p + q + r, then lexicographically in
/// (p, q, r) descending.
std::vector<Candidate> default_candidates();
/// The three index patterns of T: Lh H(Lh., .), Lh H(., Lh.), H(Lh^2 ., .).
std::vector<Candidate> tensor_t_candidates();
/// The Haantjes torsion alone.
std::vector<Candidate> haantjes_candidate();

struct SearchSolution {
  RationalVector coefficients;
  Eigen::Index rank = 0;
  /// Row space of the resulting system equals the integrability system.
  bool equivalent = false;
};

struct SearchResult {
  std::vector<std::string> candidate_names;
  /// Basis of the admissible coefficient space, one entry per basis vector.
  std::vector<SearchSolution> basis;
  /// A fixed pseudo-random rational combination of the basis (absent when
  /// the space is zero).
  std::optional<SearchSolution> generic;
  Eigen::Index cond3_rank = 0;

  /// True if `c` lies in the span of the basis.
  bool contains(const RationalVector& c) const;
};

/// Finds all linear combinations of the candidates that vanish on every
/// linearized operator satisfying the integrability system, and reports for
/// each basis vector whether its vanishing is equivalent to that system.
/// Throws std::invalid_argument for an empty candidate list.
SearchResult search_tensor(Eigen::Index n, const std::vector<Candidate>& candidates);

/// Rank and equivalence of one given combination sum_i c_i candidate_i.
/// Does not check that the combination is admissible; see
/// SearchResult::contains for that.
SearchSolution assess_combination(Eigen::Index n, const std::vector<Candidate>& candidates,
                                  const RationalVector& c);

}  // namespace haantjes
