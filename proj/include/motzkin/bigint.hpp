#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

// Signed arbitrary-precision integer; series coefficients may be negative.
using BigInt = boost::multiprecision::cpp_int;

// Counting results. Same representation as BigInt, always >= 0.
using BigCount = BigInt;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace motzkin
