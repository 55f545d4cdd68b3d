#ifndef LUMBRAL_RATIONAL_HPP
#define LUMBRAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lumbral {

/// Exact arbitrary-precision integers and rationals.
///
/// Rational is always stored in lowest terms with positive denominator;
/// all arithmetic is exact and division by zero throws. Values are
/// immutable in spirit: every operation returns a fresh value, so they
/// are safe to share between threads.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(m, k). Out-of-range k (k < 0 or k > m)
/// returns 0, matching the vanishing convention used by every summation
/// formula in this library. Negative m is an error.
Integer binomial(long m, long k);

/// Binomial coefficient extended to negative upper index by the
/// polynomial in m: C(m, k) = m(m-1)...(m-k+1)/k!. Needed only by the
/// brute-force identity checks, whose summands hit C(n-k, i-s) with
/// n < k. Agrees with binomial() for m >= 0.
Integer binomial_ext(long m, long k);

/// n! for n >= 0.
Integer factorial(long n);

/// Integer power of a rational; e >= 0.
Rational rat_pow(const Rational& base, long e);

/// Parse "p/q" or "p" with optional leading '-'. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational rat_parse(const std::string& text);

/// Render as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& r);

}  // namespace lumbral

#endif
