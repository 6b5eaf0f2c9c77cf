#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spermat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt ipow(const BigInt& base, int exp);

/// Decimal rendering of an exact rational with round-half-even at `places`
/// fractional digits. The only place floating point *never* enters: the
/// digits come from big-integer division.
std::string decimal_string(const BigRat& value, int places);

}  // namespace spermat
