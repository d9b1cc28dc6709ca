#include "haantjes/random.hpp"

namespace haantjes {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RandomSource::nonzero_rational() {
  std::int64_t num = 0;
  while (num == 0) num = integer(-5, 5);
  const auto den = integer(1, 3);
  return Rational(num) / Rational(den);
}

Poly RandomSource::poly(std::size_t nvars, int degree, int max_terms, std::size_t coords) {
  const auto active = coords == 0 ? nvars : coords;
  Poly p = Poly::zero(nvars);
  const auto terms = integer(1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    const auto d = integer(0, degree);
    for (std::int64_t k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(active) - 1))];
    p += Poly::monomial(std::move(e), nonzero_rational());
  }
  return p;
}

OperatorField RandomSource::operator_field(Eigen::Index dim, int degree, int max_terms) {
  OperatorField l(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      l(i, j) = poly(static_cast<std::size_t>(dim), degree, max_terms);
  return l;
}

OperatorField RandomSource::strict_upper_triangular(Eigen::Index dim, int degree, int max_terms) {
  OperatorField l = OperatorField::Constant(dim, dim, Poly::zero(static_cast<std::size_t>(dim)));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i + 1; j < dim; ++j)
      l(i, j) = poly(static_cast<std::size_t>(dim), degree, max_terms);
  return l;
}

VectorField RandomSource::vector_field(Eigen::Index dim, int degree, int max_terms) {
  VectorField v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = poly(static_cast<std::size_t>(dim), degree, max_terms);
  return v;
}

AffineChange RandomSource::affine_change(Eigen::Index dim) {
  while (true) {
    RationalMatrix m(dim, dim);
    RationalVector s(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      s(i) = integer(-3, 3);
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = integer(-2, 2);
    }
    if (rank(m) == dim) return {m, s};
  }
}

RationalMatrix RandomSource::rational_matrix(Eigen::Index rows, Eigen::Index cols,
                                             int sparsity_percent) {
  RationalMatrix m = RationalMatrix::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (integer(0, 99) >= sparsity_percent) m(i, j) = nonzero_rational();
  return m;
}

}  // namespace haantjes
