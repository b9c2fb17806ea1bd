#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace btlab {

/// Arbitrary-precision signed integer used for every lattice coordinate.
using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned exponent);

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt x, const BigInt& p);

/// Returns k when |x| == p^k, nothing otherwise (including x == 0).
std::optional<unsigned> p_power_exponent(const BigInt& x, const BigInt& p);

/// Floor division (rounds toward negative infinity), b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& x);
BigInt parse_bigint(std::string_view text);

std::size_t hash_value(const BigInt& x);

}  // namespace btlab
