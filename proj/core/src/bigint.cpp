#include "btlab/bigint.hpp"

#include <charconv>

#include "btlab/error.hpp"

namespace btlab {

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

unsigned valuation(BigInt x, const BigInt& p) {
  unsigned v = 0;
  if (x < 0) x = -x;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::optional<unsigned> p_power_exponent(const BigInt& x, const BigInt& p) {
  if (x == 0) return std::nullopt;
  BigInt y = x < 0 ? BigInt(-x) : x;
  unsigned k = 0;
  while (y % p == 0) {
    y /= p;
    ++k;
  }
  if (y != 1) return std::nullopt;
  return k;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::InvalidInput, "empty integer literal");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidInput, "bad integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::size_t hash_value(const BigInt& x) {
  // Mix the limbs; sign folded in last.
  const auto& backend = x.backend();
  std::size_t h = 0x9e3779b97f4a7c15ull;
  const auto* limbs = backend.limbs();
  for (std::size_t i = 0; i < backend.size(); ++i) {
    h ^= static_cast<std::size_t>(limbs[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  if (x.sign() < 0) h = ~h;
  return h;
}

}  // namespace btlab
