#include "haantjes/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace haantjes {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

Poly to_ring(const Rational& q, std::size_t nvars) { return Poly::constant(nvars, q); }

}  // namespace

Tensor12::Tensor12(Eigen::Index dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim)) {}

VectorField Tensor12::slot(Eigen::Index j, Eigen::Index k) const {
  VectorField v(dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) v(i) = (*this)(i, j, k);
  return v;
}

void Tensor12::set_slot(Eigen::Index j, Eigen::Index k, const VectorField& v) {
  for (Eigen::Index i = 0; i < dim_; ++i) (*this)(i, j, k) = v(i);
}

bool Tensor12::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t Tensor12::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Poly& p) { return !p.is_zero(); }));
}

Tensor12& Tensor12::operator+=(const Tensor12& rhs) {
  require_same_dim(dim_, rhs.dim_, "tensor sum");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += rhs.data_[n];
  return *this;
}

Tensor12& Tensor12::operator-=(const Tensor12& rhs) {
  require_same_dim(dim_, rhs.dim_, "tensor difference");
  for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= rhs.data_[n];
  return *this;
}

Tensor12& Tensor12::operator*=(const Poly& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

bool operator==(const Tensor12& a, const Tensor12& b) {
  return a.dim_ == b.dim_ && a.data_ == b.data_;
}

Tensor12 upper(const OperatorField& l, const Tensor12& s) {
  const auto n = s.dim();
  require_same_dim(l.rows(), n, "upper contraction");
  Tensor12 out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) out.set_slot(j, k, l * s.slot(j, k));
  }
  return out;
}

Tensor12 lower_first(const Tensor12& s, const OperatorField& l) {
  const auto n = s.dim();
  require_same_dim(l.rows(), n, "lower contraction");
  Tensor12 out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        Poly acc;
        for (Eigen::Index sidx = 0; sidx < n; ++sidx) {
          if (!l(sidx, j).is_zero()) acc += s(i, sidx, k) * l(sidx, j);
        }
        out(i, j, k) = std::move(acc);
      }
    }
  }
  return out;
}

Tensor12 lower_second(const Tensor12& s, const OperatorField& l) {
  const auto n = s.dim();
  require_same_dim(l.rows(), n, "lower contraction");
  Tensor12 out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        Poly acc;
        for (Eigen::Index sidx = 0; sidx < n; ++sidx) {
          if (!l(sidx, k).is_zero()) acc += s(i, j, sidx) * l(sidx, k);
        }
        out(i, j, k) = std::move(acc);
      }
    }
  }
  return out;
}

Tensor12 lower_both(const Tensor12& s, const OperatorField& first, const OperatorField& second) {
  return lower_second(lower_first(s, first), second);
}

std::size_t ring_nvars(const OperatorField& l) {
  std::size_t n = 0;
  for (Eigen::Index i = 0; i < l.size(); ++i) n = std::max(n, l.data()[i].nvars());
  return n;
}

std::size_t ring_nvars(const VectorField& v) {
  std::size_t n = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) n = std::max(n, v(i).nvars());
  return n;
}

std::size_t ring_nvars(const Tensor12& s) {
  std::size_t n = 0;
  const auto d = s.dim();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) n = std::max(n, s(i, j, k).nvars());
  return n;
}

OperatorField identity(Eigen::Index dim, std::size_t nvars) {
  OperatorField id = OperatorField::Constant(dim, dim, Poly::zero(nvars));
  for (Eigen::Index i = 0; i < dim; ++i) id(i, i) = Poly::constant(nvars, Rational(1));
  return id;
}

OperatorField jordan_block(Eigen::Index dim, const Poly& lambda) {
  OperatorField j = identity(dim, lambda.nvars());
  for (Eigen::Index i = 0; i < dim; ++i) j(i, i) = lambda;
  for (Eigen::Index i = 0; i + 1 < dim; ++i) j(i, i + 1) = Poly::constant(lambda.nvars(), 1);
  return j;
}

VectorField basis_field(Eigen::Index dim, Eigen::Index index, std::size_t nvars) {
  VectorField v = VectorField::Constant(dim, Poly::zero(nvars));
  v(index) = Poly::constant(nvars, Rational(1));
  return v;
}

namespace {

// Coordinate derivative that treats free constants as constants.
Poly coordinate_diff(const Poly& p, Eigen::Index k) {
  if (p.nvars() == 0) return Poly();
  return diff(p, static_cast<std::size_t>(k));
}

}  // namespace

VectorField diff(const VectorField& v, Eigen::Index k) {
  return v.unaryExpr([k](const Poly& p) { return coordinate_diff(p, k); });
}

OperatorField diff(const OperatorField& l, Eigen::Index k) {
  return l.unaryExpr([k](const Poly& p) { return coordinate_diff(p, k); });
}

VectorField lie_bracket(const VectorField& xi, const VectorField& eta) {
  require_same_dim(xi.size(), eta.size(), "lie_bracket");
  const auto n = xi.size();
  VectorField out = VectorField::Constant(n, Poly());
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!xi(j).is_zero()) out += xi(j) * diff(eta, j);
    if (!eta(j).is_zero()) out -= eta(j) * diff(xi, j);
  }
  return out;
}

VectorField apply(const OperatorField& l, const VectorField& xi) {
  require_same_dim(l.cols(), xi.size(), "apply");
  return l * xi;
}

OperatorField compose(const OperatorField& l, const OperatorField& m) {
  require_same_dim(l.cols(), m.rows(), "compose");
  return l * m;
}

OperatorField power(const OperatorField& l, unsigned k) {
  if (l.rows() != l.cols()) throw std::invalid_argument("power of a non-square operator");
  OperatorField result = identity(l.rows(), ring_nvars(l));
  for (unsigned i = 0; i < k; ++i) result = compose(result, l);
  return result;
}

Poly trace(const OperatorField& l) {
  if (l.rows() != l.cols()) throw std::invalid_argument("trace of a non-square operator");
  Poly t = Poly::zero(ring_nvars(l));
  for (Eigen::Index i = 0; i < l.rows(); ++i) t += l(i, i);
  return t;
}

OperatorField traceless_part(const OperatorField& l) {
  const auto n = l.rows();
  Poly shift = trace(l);
  shift *= Rational(1) / Rational(n);
  OperatorField out = l;
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) -= shift;
  return out;
}

RationalMatrix evaluate(const OperatorField& l, std::span<const Rational> point) {
  return l.unaryExpr([point](const Poly& p) { return evaluate(p, point); });
}

RationalVector evaluate(const VectorField& v, std::span<const Rational> point) {
  return v.unaryExpr([point](const Poly& p) { return evaluate(p, point); });
}

OperatorField substitute(const OperatorField& l, const std::map<std::size_t, Rational>& values) {
  return l.unaryExpr([&values](const Poly& p) {
    return p.nvars() == 0 ? p : substitute(p, values);
  });
}

Tensor12 substitute(const Tensor12& s, const std::map<std::size_t, Rational>& values) {
  return s.unary_expr([&values](const Poly& p) {
    return p.nvars() == 0 ? p : substitute(p, values);
  });
}

AffineChange::AffineChange(RationalMatrix jacobian, RationalVector shift)
    : jacobian_(std::move(jacobian)), shift_(std::move(shift)) {
  if (jacobian_.rows() != jacobian_.cols() || shift_.size() != jacobian_.rows()) {
    throw std::invalid_argument("affine change: inconsistent sizes");
  }
  inverse_ = inverse(jacobian_);
}

AffineChange AffineChange::identity(Eigen::Index dim) {
  return {RationalMatrix::Identity(dim, dim), RationalVector::Zero(dim)};
}

AffineChange AffineChange::permutation(std::span<const Eigen::Index> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, perm[static_cast<std::size_t>(i)]) = 1;
  return {m, RationalVector::Zero(n)};
}

AffineChange AffineChange::after(const AffineChange& inner) const {
  require_same_dim(dim(), inner.dim(), "affine composition");
  return {RationalMatrix(jacobian_ * inner.jacobian_),
          RationalVector(jacobian_ * inner.shift_ + shift_)};
}

Poly AffineChange::pull_back(const Poly& p) const {
  if (p.nvars() == 0) return p;
  const auto n = dim();
  if (p.nvars() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("pull_back: polynomial ring smaller than the dimension");
  }
  const RationalVector offset = -(inverse_ * shift_);
  std::vector<Poly> images;
  images.reserve(p.nvars());
  for (Eigen::Index i = 0; i < n; ++i) {
    Poly img = Poly::constant(p.nvars(), offset(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      if (inverse_(i, j) != 0) {
        img += Poly::constant(p.nvars(), inverse_(i, j)) *
               Poly::variable(p.nvars(), static_cast<std::size_t>(j));
      }
    }
    images.push_back(std::move(img));
  }
  for (std::size_t extra = static_cast<std::size_t>(n); extra < p.nvars(); ++extra) {
    images.push_back(Poly::variable(p.nvars(), extra));
  }
  return compose(p, images);
}

namespace {

OperatorField lift(const RationalMatrix& m, std::size_t nvars) {
  return m.unaryExpr([nvars](const Rational& q) { return to_ring(q, nvars); });
}

}  // namespace

OperatorField pushforward(const OperatorField& l, const AffineChange& phi) {
  require_same_dim(l.rows(), phi.dim(), "pushforward");
  const auto nvars = ring_nvars(l);
  const OperatorField moved = l.unaryExpr([&phi](const Poly& p) { return phi.pull_back(p); });
  return lift(phi.jacobian(), nvars) * moved * lift(phi.inverse_jacobian(), nvars);
}

VectorField pushforward(const VectorField& v, const AffineChange& phi) {
  require_same_dim(v.size(), phi.dim(), "pushforward");
  const auto nvars = ring_nvars(v);
  const VectorField moved = v.unaryExpr([&phi](const Poly& p) { return phi.pull_back(p); });
  return lift(phi.jacobian(), nvars) * moved;
}

Tensor12 pushforward_tensor(const Tensor12& s, const AffineChange& phi) {
  require_same_dim(s.dim(), phi.dim(), "pushforward_tensor");
  const auto nvars = ring_nvars(s);
  const Tensor12 moved = s.unary_expr([&phi](const Poly& p) { return phi.pull_back(p); });
  const OperatorField inv = lift(phi.inverse_jacobian(), nvars);
  return upper(lift(phi.jacobian(), nvars), lower_both(moved, inv, inv));
}

}  // namespace haantjes
