#pragma once

#include <cstdint>

#include "btlab/bigint.hpp"

namespace btlab {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t value);

/// Field Q_p and dimension n of the building of PSL_n(Q_p).
class BuildingParams {
 public:
  /// Throws InvalidInput unless p is prime and n >= 2.
  static BuildingParams make(std::uint64_t p, unsigned n);

  std::uint64_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  const BigInt& prime() const noexcept { return prime_; }

  friend bool operator==(const BuildingParams& a, const BuildingParams& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  BuildingParams(std::uint64_t p, unsigned n) : p_(p), n_(n), prime_(p) {}

  std::uint64_t p_;
  unsigned n_;
  BigInt prime_;
};

}  // namespace btlab
