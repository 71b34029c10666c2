#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace paracount {

/// Exact arbitrary-precision integer. Walk counts reach n^a, so no
/// fixed-width type is used anywhere a count is accumulated.
using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative count produced by the counting problems.
using WalkCount = BigInt;

/// Signed value produced by the parameterised determinant.
using SignedValue = BigInt;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt pow2(std::uint64_t exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

/// ceil(log2(max(x, 2))); the logarithm convention used by every gate.
inline std::uint64_t ceil_log2(std::uint64_t x) {
  if (x < 2) x = 2;
  std::uint64_t bits = 0;
  std::uint64_t v = x - 1;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

}  // namespace paracount
