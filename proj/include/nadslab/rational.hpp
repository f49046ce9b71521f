#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace nadslab {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backend canonicalizes on construction and arithmetic).
// Serialized as "p/q" everywhere, q >= 1; no decimal output exists in this
// library.
using Rational = boost::multiprecision::cpp_rational;

BigInt pow2(std::uint64_t exponent);

// 2^(-exponent)
Rational dyadic(std::uint64_t exponent);

std::string to_fraction_string(const Rational& value);

// Strict "p/q" with optional leading '-' on p; anything else is a ParseError.
Rational rational_from_string(std::string_view text);

} // namespace nadslab
