#ifndef KNOTSIG_EXACT_HPP
#define KNOTSIG_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace knotsig {

// All counts and moments in this library are exact; no value is ever held
// in floating point until it reaches a comparison or display boundary.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) with the vanishing convention used
/// throughout the triangle formulas: 0 whenever n < 0, k < 0 or k > n.
/// C(0, 0) = 1.
ExactInt binomial(long long n, long long k);

/// Decimal expansion of q with exactly `places` fractional digits.
/// Rounds half away from zero; trailing zeros are kept.
/// places = 0 renders a bare integer with no decimal point.
std::string decimal_render(const ExactRational& q, unsigned places);

double to_double(const ExactRational& q);

}  // namespace knotsig

#endif
