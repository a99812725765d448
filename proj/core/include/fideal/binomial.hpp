#pragma once

#include <cstdint>
#include <stdexcept>

namespace fideal {

using Int128 = __int128;
using UInt128 = unsigned __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// C(n, k) by the exact multiplicative recurrence. Returns 0 for k < 0 or
/// k > n. Throws OverflowError when the result does not fit 64 bits.
std::uint64_t binomial(int n, int k);

/// C(n, k) in 128 bits, for bounds like C(C(8,4), 35) that exceed 64 bits.
/// Throws OverflowError past 128 bits.
UInt128 binomial128(int n, int k);

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);

}  // namespace fideal
