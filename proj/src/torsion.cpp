#include "haantjes/torsion.hpp"

#include <stdexcept>
#include <string>

#include "haantjes/random.hpp"

namespace haantjes {

namespace {

void require_square(const OperatorField& l, const char* what) {
  if (l.rows() != l.cols()) throw std::invalid_argument(std::string(what) + ": operator is not square");
}

void require_level(int m) {
  if (m < 1) throw std::invalid_argument("torsion level must be >= 1, got " + std::to_string(m));
}

}  // namespace

Tensor12 nijenhuis(const OperatorField& l) {
  require_square(l, "nijenhuis");
  const auto n = l.rows();
  std::vector<OperatorField> dl;
  dl.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) dl.push_back(diff(l, k));

  Tensor12 out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // L^2 [d_j, d_k] = 0; [L d_j, d_k] = -d_k(L d_j).
      const VectorField twist = dl[static_cast<std::size_t>(k)].col(j) -
                                dl[static_cast<std::size_t>(j)].col(k);
      out.set_slot(j, k, lie_bracket(l.col(j), l.col(k)) + l * twist);
    }
  }
  return out;
}

Tensor12 haantjes_step(const OperatorField& l, const Tensor12& previous) {
  require_square(l, "haantjes_step");
  const OperatorField l2 = l * l;
  Tensor12 out = upper(l2, previous);
  out += lower_both(previous, l, l);
  out -= upper(l, lower_first(previous, l));
  out -= upper(l, lower_second(previous, l));
  return out;
}

Tensor12 torsion_level_from(const OperatorField& l, const Tensor12& base, int m) {
  require_level(m);
  Tensor12 t = base;
  for (int level = 2; level <= m; ++level) t = haantjes_step(l, t);
  return t;
}

Tensor12 torsion_level(const OperatorField& l, int m) {
  require_level(m);
  return torsion_level_from(l, nijenhuis(l), m);
}

Tensor12 fn_bracket(const OperatorField& k, const OperatorField& l) {
  require_square(k, "fn_bracket");
  require_square(l, "fn_bracket");
  if (k.rows() != l.rows()) throw std::invalid_argument("fn_bracket: dimension mismatch");
  const auto n = l.rows();
  std::vector<OperatorField> dk;
  std::vector<OperatorField> dl;
  for (Eigen::Index p = 0; p < n; ++p) {
    dk.push_back(diff(k, p));
    dl.push_back(diff(l, p));
  }
  Tensor12 out(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      const VectorField k_twist = dk[ub].col(a) - dk[ua].col(b);
      const VectorField l_twist = dl[ub].col(a) - dl[ua].col(b);
      out.set_slot(a, b,
                   lie_bracket(k.col(a), l.col(b)) + lie_bracket(l.col(a), k.col(b)) +
                       l * k_twist + k * l_twist);
    }
  }
  return out;
}

Tensor12 fn_bracket_step(const OperatorField& k, const OperatorField& l, const Tensor12& previous) {
  const OperatorField kl = k * l;
  const OperatorField lk = l * k;
  Tensor12 out = upper(kl, previous);
  out += lower_both(previous, k, l);
  out -= upper(l, lower_first(previous, k));
  out -= upper(k, lower_second(previous, l));
  out += upper(lk, previous);
  out += lower_both(previous, l, k);
  out -= upper(k, lower_first(previous, l));
  out -= upper(l, lower_second(previous, k));
  return out;
}

Tensor12 fn_bracket_level(const OperatorField& k, const OperatorField& l, int m) {
  require_level(m);
  Tensor12 h = fn_bracket(k, l);
  for (int level = 2; level <= m; ++level) h = fn_bracket_step(k, l, h);
  return h;
}

Tensor12 tensor_t_from(const OperatorField& traceless, const Tensor12& haantjes) {
  Tensor12 out = upper(traceless, lower_first(haantjes, traceless));
  out -= upper(traceless, lower_second(haantjes, traceless));
  out += lower_first(haantjes, traceless * traceless);
  return out;
}

Tensor12 tensor_t(const OperatorField& l, TensorTOptions options) {
  require_square(l, "tensor_t");
  if (l.rows() != 4 && !options.force) {
    throw std::invalid_argument("tensor T is defined in dimension 4 (got " +
                                std::to_string(l.rows()) + "); pass force to evaluate anyway");
  }
  return tensor_t_from(traceless_part(l), haantjes_torsion(l));
}

std::pair<OperatorField, OperatorField> commuting_triangular_pair(int n, std::uint64_t seed,
                                                                  int degree) {
  if (n < 2) throw std::invalid_argument("commuting_triangular_pair: n must be >= 2");
  if (degree < 0) throw std::invalid_argument("commuting_triangular_pair: degree must be >= 0");
  RandomSource rng(seed);
  const auto nv = static_cast<std::size_t>(n);
  // Either a constant N with coefficients of full degree, or a linear N with
  // deg p_i <= degree - i; both keep every entry of K and L within `degree`.
  const int nil_degree = degree > 0 && rng.integer(0, 1) == 1 ? 1 : 0;
  const OperatorField nil = rng.strict_upper_triangular(n, nil_degree, 2);
  OperatorField k = OperatorField::Constant(n, n, Poly::zero(nv));
  OperatorField l = k;
  OperatorField nil_power = nil;
  for (int i = 1; i < n; ++i) {
    const int coeff_degree = degree - nil_degree * i;
    if (coeff_degree < 0) break;
    k += rng.poly(nv, coeff_degree, 2) * nil_power;
    l += rng.poly(nv, coeff_degree, 2) * nil_power;
    nil_power = nil_power * nil;
  }
  return {k, l};
}

}  // namespace haantjes
