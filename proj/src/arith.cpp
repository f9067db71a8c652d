#include "gaussdeg/arith.hpp"

#include "gaussdeg/errors.hpp"

#include <cctype>

namespace gaussdeg {

BigInt factorial(long k) {
  if (k < 0) throw ParameterError("factorial of negative integer " + std::to_string(k));
  BigInt result = 1;
  for (long i = 2; i <= k; ++i) result *= i;
  return result;
}

BigInt binomial(long k, long j) {
  if (j < 0 || k < j) return 0;
  if (j > k - j) j = k - j;
  BigInt result = 1;
  for (long i = 1; i <= j; ++i) {
    result *= k - j + i;
    result /= i;
  }
  return result;
}

BigRat inverse_factorial(long k) {
  if (k < 0) return BigRat(0);
  return BigRat(BigInt(1), factorial(k));
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt result = 1;
  for (unsigned long i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigRat power(const BigRat& base, unsigned long exponent) {
  BigRat result = 1;
  for (unsigned long i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt require_integral(const BigRat& value, std::string_view context) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw InternalError(std::string(context) + ": expected an integer, got " +
                        to_fraction_string(value));
  }
  return boost::multiprecision::numerator(value);
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_fraction_string(const BigRat& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

BigInt parse_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) throw ParameterError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParameterError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace gaussdeg
