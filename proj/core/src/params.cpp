#include "btlab/params.hpp"

#include <array>

#include "btlab/error.hpp"

namespace btlab {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (value % b == 0) return value == b;
  }
  u64 d = value - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BuildingParams BuildingParams::make(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be at least 2 (n = 1 gives a single point)");
  return BuildingParams(p, n);
}

}  // namespace btlab
