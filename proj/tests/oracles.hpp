#pragma once

// Reference computations that avoid the library's Hermite and Smith code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "btlab/bigint.hpp"
#include "btlab/matrix.hpp"

namespace oracle {

using btlab::BigInt;
using btlab::IntMatrix;

inline bool is_prime_trial(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// Vectors of F_p^n encoded as base-p integers.
inline std::vector<unsigned> decode(unsigned code, unsigned n, unsigned p) {
  std::vector<unsigned> v(n);
  for (unsigned i = 0; i < n; ++i) {
    v[i] = code % p;
    code /= p;
  }
  return v;
}

inline unsigned encode(const std::vector<unsigned>& v, unsigned p) {
  unsigned code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

/// Span of a list of vectors, as a sorted set of codes.
inline std::vector<unsigned> span(const std::vector<unsigned>& gens, unsigned n, unsigned p) {
  std::set<unsigned> seen{0};
  std::vector<unsigned> frontier{0};
  while (!frontier.empty()) {
    std::vector<unsigned> next;
    for (unsigned x : frontier) {
      for (unsigned g : gens) {
        auto a = decode(x, n, p);
        auto b = decode(g, n, p);
        for (unsigned i = 0; i < n; ++i) a[i] = (a[i] + b[i]) % p;
        const unsigned c = encode(a, p);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Every j-dimensional subspace of F_p^n as its sorted element set, found by
/// closing all j-tuples of vectors under addition.
inline std::set<std::vector<unsigned>> all_subspaces(unsigned n, unsigned j, unsigned p) {
  unsigned size = 1;
  for (unsigned i = 0; i < n; ++i) size *= p;
  unsigned target = 1;
  for (unsigned i = 0; i < j; ++i) target *= p;
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> gens(j, 1);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned depth, unsigned start) {
    if (depth == j) {
      auto s = span(gens, n, p);
      if (s.size() == target) out.insert(std::move(s));
      return;
    }
    for (unsigned c = start; c < size; ++c) {
      gens[depth] = c;
      rec(depth + 1, c + 1);
    }
  };
  rec(0, 1);
  return out;
}

/// Leibniz determinant.
inline BigInt det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    BigInt term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (std::size_t r = 0; r < n; ++r) {
        if (r != j) rows.push_back(r);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (c != i) cols.push_back(c);
      }
      const BigInt minor = det(submatrix(m, rows, cols));
      out(i, j) = ((i + j) % 2 == 0) ? minor : BigInt(-minor);
    }
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) pick.push_back(i);
    }
    out.push_back(std::move(pick));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// Whether the lattice spanned by the columns of square a contains the
/// columns of b.
inline bool contains(const IntMatrix& a, const IntMatrix& b) {
  const BigInt d = det(a);
  const IntMatrix x = adjugate(a) * b;
  for (const BigInt& v : x.data()) {
    if (v % d != 0) return false;
  }
  return true;
}

/// Determinantal divisors D_1 | D_2 | ... (gcd of all k x k minors); the
/// invariant factors are D_k / D_{k-1} while D_k != 0.
inline std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    for (const auto& rows : combinations(m.rows(), k)) {
      for (const auto& cols : combinations(m.cols(), k)) g = gcd(g, det(submatrix(m, rows, cols)));
    }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

/// Building distance between the classes of the lattices spanned by the
/// columns of a and b: the spread of the p-adic valuations of the
/// elementary divisors of a^{-1} b.
inline unsigned building_distance(const IntMatrix& a, const IntMatrix& b, std::uint64_t p) {
  const IntMatrix x = adjugate(a) * b;
  const BigInt prime = p;
  unsigned lo = ~0U;
  unsigned hi = 0;
  for (const BigInt& d : invariant_factors(x)) {
    unsigned v = 0;
    BigInt t = d;
    while (t % prime == 0) {
      t /= prime;
      ++v;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

/// Number of triangles by scanning all vertex triples.
template <class Adjacent>
std::size_t triangle_count(std::size_t n, Adjacent adjacent) {
  std::size_t count = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) continue;
      for (std::size_t w = v + 1; w < n; ++w) count += adjacent(u, w) && adjacent(v, w) ? 1 : 0;
    }
  }
  return count;
}

}  // namespace oracle
