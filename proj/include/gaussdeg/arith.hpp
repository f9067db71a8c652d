#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gaussdeg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// k! for k >= 0. Throws ParameterError for negative k.
BigInt factorial(long k);

/// Binomial coefficient with C(k, j) = 0 whenever j < 0 or k < j.
/// Negative k also yields 0; no generalized binomials are used anywhere.
BigInt binomial(long k, long j);

/// Exact rational value of 1/k!, taken to be 0 for k < 0.
BigRat inverse_factorial(long k);

BigInt power(const BigInt& base, unsigned long exponent);
BigRat power(const BigRat& base, unsigned long exponent);

/// Returns the integer value of `value`, or throws InternalError naming
/// `context` when a denominator survives reduction.
BigInt require_integral(const BigRat& value, std::string_view context);

std::string to_decimal(const BigInt& value);

/// Reduced "p/q" rendering; the denominator is always printed.
std::string to_fraction_string(const BigRat& value);

/// Parses an optionally signed decimal integer. Throws ParameterError on
/// anything else (no whitespace, no exponent, no leading '+').
BigInt parse_decimal(std::string_view text);

}  // namespace gaussdeg
