#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "haantjes/linalg.hpp"
#include "haantjes/poly.hpp"

namespace haantjes {

/// Components of a vector field in the coordinate frame d/dx1, ..., d/dxn.
using VectorField = VectorX<Poly>;

/// A (1,1) tensor field; entry (i, j) is L^i_j, so column j is L applied to
/// d/dx_{j+1}.
///
/// Entries may live in a ring with more variables than the dimension. The
/// first dim() variables are the coordinates; any further variables are
/// constant parameters and are never differentiated.
using OperatorField = MatrixX<Poly>;

/// A (1,2) tensor field S^i_{jk} stored densely as n^3 polynomials.
class Tensor12 {
 public:
  Tensor12() = default;
  explicit Tensor12(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return dim_; }

  Poly& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
  }
  const Poly& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
  }

  /// The vector S(d/dx_{j+1}, d/dx_{k+1}).
  VectorField slot(Eigen::Index j, Eigen::Index k) const;
  void set_slot(Eigen::Index j, Eigen::Index k, const VectorField& v);

  bool is_zero() const;
  std::size_t nonzero_count() const;

  Tensor12& operator+=(const Tensor12& rhs);
  Tensor12& operator-=(const Tensor12& rhs);
  Tensor12& operator*=(const Poly& c);

  friend Tensor12 operator+(Tensor12 a, const Tensor12& b) { return a += b; }
  friend Tensor12 operator-(Tensor12 a, const Tensor12& b) { return a -= b; }
  friend Tensor12 operator*(const Poly& c, Tensor12 a) { return a *= c; }
  friend bool operator==(const Tensor12& a, const Tensor12& b);
  friend bool operator!=(const Tensor12& a, const Tensor12& b) { return !(a == b); }

  template <typename F>
  Tensor12 unary_expr(F&& f) const {
    Tensor12 out(dim_);
    for (std::size_t n = 0; n < data_.size(); ++n) out.data_[n] = f(data_[n]);
    return out;
  }

 private:
  Eigen::Index dim_ = 0;
  std::vector<Poly> data_;
};

// Contractions with operator fields. With S a (1,2) tensor and L, M (1,1):
//   upper(L, S)^i_{jk}        = L^i_s S^s_{jk}        i.e. L S(., .)
//   lower_first(S, L)^i_{jk}  = S^i_{sk} L^s_j        i.e. S(L., .)
//   lower_second(S, L)^i_{jk} = S^i_{js} L^s_k        i.e. S(., L.)
//   lower_both(S, L, M)       = S(L., M.)
Tensor12 upper(const OperatorField& l, const Tensor12& s);
Tensor12 lower_first(const Tensor12& s, const OperatorField& l);
Tensor12 lower_second(const Tensor12& s, const OperatorField& l);
Tensor12 lower_both(const Tensor12& s, const OperatorField& first, const OperatorField& second);

/// Number of variables of the common ring of the entries (0 if all entries
/// are free constants).
std::size_t ring_nvars(const OperatorField& l);
std::size_t ring_nvars(const VectorField& v);
std::size_t ring_nvars(const Tensor12& s);

OperatorField identity(Eigen::Index dim, std::size_t nvars);
/// Jordan block with eigenvalue `lambda` (ones on the superdiagonal).
OperatorField jordan_block(Eigen::Index dim, const Poly& lambda);
/// The coordinate field d/dx_{index+1}.
VectorField basis_field(Eigen::Index dim, Eigen::Index index, std::size_t nvars);

/// Partial derivative d/dx_{k+1} applied entrywise.
VectorField diff(const VectorField& v, Eigen::Index k);
OperatorField diff(const OperatorField& l, Eigen::Index k);

/// [xi, eta]^i = xi^j d_j eta^i - eta^j d_j xi^i, summing over coordinates.
VectorField lie_bracket(const VectorField& xi, const VectorField& eta);

VectorField apply(const OperatorField& l, const VectorField& xi);
OperatorField compose(const OperatorField& l, const OperatorField& m);
OperatorField power(const OperatorField& l, unsigned k);
Poly trace(const OperatorField& l);
/// L - (trace L / n) Id.
OperatorField traceless_part(const OperatorField& l);

RationalMatrix evaluate(const OperatorField& l, std::span<const Rational> point);
RationalVector evaluate(const VectorField& v, std::span<const Rational> point);

OperatorField substitute(const OperatorField& l, const std::map<std::size_t, Rational>& values);
Tensor12 substitute(const Tensor12& s, const std::map<std::size_t, Rational>& values);

/// Affine coordinate change y = M x + shift with exact inverse.
class AffineChange {
 public:
  /// Throws std::domain_error if `jacobian` is singular.
  AffineChange(RationalMatrix jacobian, RationalVector shift);

  static AffineChange identity(Eigen::Index dim);
  /// y_i = x_{perm[i]+1}.
  static AffineChange permutation(std::span<const Eigen::Index> perm);

  Eigen::Index dim() const noexcept { return jacobian_.rows(); }
  const RationalMatrix& jacobian() const noexcept { return jacobian_; }
  const RationalMatrix& inverse_jacobian() const noexcept { return inverse_; }
  const RationalVector& shift() const noexcept { return shift_; }

  /// this after inner: y = M (M' x + s') + s.
  AffineChange after(const AffineChange& inner) const;

  /// p(phi^{-1}(y)) as a polynomial in y; parameter variables beyond dim()
  /// are left untouched.
  Poly pull_back(const Poly& p) const;

 private:
  RationalMatrix jacobian_;
  RationalMatrix inverse_;
  RationalVector shift_;
};

/// L'(y) = M L(phi^{-1} y) M^{-1}.
OperatorField pushforward(const OperatorField& l, const AffineChange& phi);
VectorField pushforward(const VectorField& v, const AffineChange& phi);
/// One Jacobian factor on the upper index, one inverse factor per lower index.
Tensor12 pushforward_tensor(const Tensor12& s, const AffineChange& phi);

}  // namespace haantjes
