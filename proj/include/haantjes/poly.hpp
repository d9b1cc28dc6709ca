#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "haantjes/rational.hpp"

namespace haantjes {

/// Exponent vector of a monomial; entry i is the power of x_{i+1}.
using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic order, largest first: higher total degree wins, ties
/// broken by comparing exponents of x1, x2, ... in turn.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Thrown by parse_poly. `position` is the 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by GrlexGreater with no zero
/// coefficients, so two equal polynomials have identical term maps and
/// print identically.
///
/// A polynomial built from a bare number (`Poly(3)`, `Poly()`) has
/// nvars() == 0. Such a "free constant" adopts the variable count of the
/// other operand in any binary operation. This is what lets Eigen create
/// `Scalar(0)` and `Scalar(1)` without knowing the ring. Mixing two
/// polynomials with different nonzero variable counts throws
/// std::invalid_argument.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  Poly(int c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly zero(std::size_t nvars);
  static Poly constant(std::size_t nvars, const Rational& c);
  /// The coordinate x_{index+1} in a ring of `nvars` variables.
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(Exponents exponents, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;

  /// Same polynomial viewed in a ring with `nvars` >= nvars() variables.
  Poly promoted(std::size_t nvars) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(Poly p);
  friend bool operator==(const Poly& lhs, const Poly& rhs);
  friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Partial derivative with respect to x_{k+1}.
Poly diff(const Poly& p, std::size_t k);

/// p^e for e >= 0.
Poly pow(const Poly& p, std::uint32_t e);

/// Exact evaluation; `point` must have exactly nvars() entries (a free
/// constant accepts any point).
Rational evaluate(const Poly& p, std::span<const Rational> point);

/// Substitute x_{k+1} -> value for every (k, value) in `values`. Remaining
/// variables are kept; the variable count is unchanged.
Poly substitute(const Poly& p, const std::map<std::size_t, Rational>& values);

/// Substitute x_{i+1} -> images[i] for all i. `images.size()` must equal
/// p.nvars(); the result lives in the ring of the images.
Poly compose(const Poly& p, std::span<const Poly> images);

/// Parse the polynomial grammar: integers, `p/q` rational literals,
/// variables x1..xn, `+ - * ^`, parentheses. Division is only accepted
/// by a nonzero constant.
Poly parse_poly(std::string_view text, std::size_t nvars);

/// Canonical text in graded-lex order with variables printed as x1..xn.
std::string to_string(const Poly& p);
/// Same, with caller-supplied variable names (names.size() >= nvars()).
std::string to_string(const Poly& p, std::span<const std::string> names);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace haantjes

namespace Eigen {

template <>
struct NumTraits<haantjes::Poly> : GenericNumTraits<haantjes::Poly> {
  using Real = haantjes::Poly;
  using NonInteger = haantjes::Poly;
  using Literal = haantjes::Poly;
  using Nested = haantjes::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 50,
    MulCost = 200,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
