#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace haantjes {

/// Arbitrary-precision rational backed by GMP. Expression templates are
/// disabled so the type behaves as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace haantjes
