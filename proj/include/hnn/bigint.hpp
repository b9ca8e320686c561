#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hnn {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division; the divisor must be nonzero.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Remainder in [0, |b|).
BigInt floor_mod(const BigInt& a, const BigInt& b);

/// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt gcd(const BigInt& a, const BigInt& b);

BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace hnn
