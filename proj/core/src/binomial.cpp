#include "fideal/binomial.hpp"

#include <limits>

namespace fideal {

namespace {

UInt128 binomial_impl(int n, int k, UInt128 limit) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  UInt128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * m / i is exact; cancel g = gcd(r, i) first so i / g divides m.
    const UInt128 m = static_cast<UInt128>(n - k + i);
    UInt128 a = r;
    UInt128 b = m;
    UInt128 d = static_cast<UInt128>(i);
    UInt128 g = a, h = d;
    while (h != 0) { UInt128 t = g % h; g = h; h = t; }
    a /= g;
    d /= g;
    b /= d;
    if (a != 0 && b > limit / a) {
      throw OverflowError("binomial coefficient overflows");
    }
    r = a * b;
  }
  return r;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  return static_cast<std::uint64_t>(
      binomial_impl(n, k, std::numeric_limits<std::uint64_t>::max()));
}

UInt128 binomial128(int n, int k) {
  return binomial_impl(n, k, ~UInt128{0});
}

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflows");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflows");
  return r;
}

}  // namespace fideal
