#include <gtest/gtest.h>

#include <random>
#include <set>

#include "btlab/error.hpp"
#include "btlab/group.hpp"
#include "btlab/lattice.hpp"
#include "oracles.hpp"

using namespace btlab;

namespace {

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  for (int k = 0; k < 12; ++k) {
    const std::size_t r = rng() % n;
    const std::size_t c = (r + 1 + rng() % (n - 1)) % n;
    IntMatrix t = IntMatrix::identity(n);
    t(r, c) = static_cast<long long>(rng() % 5) - 2;
    u = u * t;
  }
  return u;
}

IntMatrix scaled(const IntMatrix& m, const BigInt& s) {
  IntMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

// Neighbours of the class with basis b from brute-force subspaces of F_p^n.
std::set<LatticeClass> oracle_neighbors(const BuildingParams& params, const IntMatrix& b) {
  const unsigned n = params.n();
  const auto p = static_cast<unsigned>(params.p());
  std::set<LatticeClass> out;
  for (unsigned j = 1; j < n; ++j) {
    for (const auto& subspace : oracle::all_subspaces(n, j, p)) {
      std::vector<std::vector<BigInt>> cols;
      for (unsigned code : subspace) {
        const auto v = oracle::decode(code, n, p);
        std::vector<BigInt> col(n, 0);
        for (unsigned r = 0; r < n; ++r) {
          for (unsigned c = 0; c < n; ++c) col[r] += b(r, c) * v[c];
        }
        cols.push_back(col);
      }
      for (unsigned c = 0; c < n; ++c) {
        std::vector<BigInt> col(n, 0);
        for (unsigned r = 0; r < n; ++r) col[r] = b(r, c) * params.prime();
        cols.push_back(col);
      }
      out.insert(canonicalize(params, IntMatrix::from_columns(cols)));
    }
  }
  return out;
}

}  // namespace

TEST(Lattice, CanonicalFormIgnoresBasisChangeAndScaling) {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{2ULL, 3U}, std::pair{3ULL, 2U}, std::pair{2ULL, 4U}}) {
    const auto params = BuildingParams::make(p, n);
    const long long exps[] = {0, 2, 1, 3};
    const LatticeClass base = diagonal_class(params, std::span(exps, n));
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix u = random_unimodular(n, rng);
      const IntMatrix moved = random_unimodular(n, rng) * base.basis() * u;
      const LatticeClass l = canonicalize(params, moved);
      EXPECT_EQ(canonicalize(params, scaled(l.basis() * u, ipow(params.prime(), 3))), l);
      // Sanity: the canonical basis spans the same lattice as moved, up to scaling.
      EXPECT_EQ(oracle::building_distance(moved, l.basis(), p), 0U);
    }
  }
}

TEST(Lattice, RepresentativeIsPrimitive) {
  const auto params = BuildingParams::make(2, 2);
  // Spanned by (2,1) and (0,2): inside Z^2 but not inside 2Z^2.
  const LatticeClass l = canonicalize(params, IntMatrix{{2, 0}, {1, 2}});
  EXPECT_EQ(l.basis(), (IntMatrix{{2, 0}, {1, 2}}));
  EXPECT_EQ(l.index_exponent(), 2U);
  EXPECT_EQ(lattice_type(l), 0);
  EXPECT_EQ(canonicalize(params, IntMatrix{{4, 0}, {2, 4}}), l);
  EXPECT_EQ(canonicalize(params, IntMatrix{{2, 0}, {0, 2}}), standard_class(params));
}

TEST(Lattice, DiagonalClassNormalizes) {
  const auto params = BuildingParams::make(3, 3);
  const long long a[] = {-1, 0, 2};
  const long long b[] = {0, 1, 3};
  EXPECT_EQ(diagonal_class(params, a), diagonal_class(params, b));
  EXPECT_EQ(diagonal_class(params, a).diagonal_exponents(), (std::vector<unsigned>{0, 1, 3}));
  EXPECT_EQ(lattice_type(diagonal_class(params, a)), 1);
}

TEST(Lattice, InvalidGeneratorsThrow) {
  const auto params = BuildingParams::make(2, 2);
  try {
    canonicalize(params, IntMatrix{{3, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommensurable);
  }
  try {
    canonicalize(params, IntMatrix{{1, 2}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

class NeighborOracle : public ::testing::TestWithParam<std::tuple<unsigned long long, unsigned>> {};

TEST_P(NeighborOracle, MatchesBruteForceSublattices) {
  const auto [p, n] = GetParam();
  const auto params = BuildingParams::make(p, n);
  const NeighborGenerator gen(params);
  std::size_t degree = 0;
  for (unsigned j = 1; j < n; ++j) degree += static_cast<std::size_t>(gaussian_binomial(n, j, p));
  EXPECT_EQ(gen.degree(), degree);

  std::vector<LatticeClass> samples{standard_class(params)};
  const long long e1[] = {0, 1, 2, 0};
  const long long e2[] = {3, 0, 1, 1};
  samples.push_back(diagonal_class(params, std::span(e1, n)));
  samples.push_back(canonicalize(params, diagonal_class(params, std::span(e2, n)).basis() *
                                             GroupElement::transvection(params, 0, n - 1, 1).matrix()));
  for (const LatticeClass& l : samples) {
    const auto found = gen.neighbors_with_dimension(l);
    std::set<LatticeClass> got;
    for (const auto& [m, j] : found) {
      got.insert(m);
      EXPECT_EQ(oracle::building_distance(l.basis(), m.basis(), p), 1U);
      EXPECT_EQ(lattice_type(m), static_cast<int>((lattice_type(l) + n - j) % n));
      EXPECT_TRUE(gen.adjacent(l, m));
    }
    EXPECT_EQ(got.size(), found.size());
    EXPECT_EQ(got, oracle_neighbors(params, l.basis()));
    EXPECT_FALSE(gen.adjacent(l, l));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, NeighborOracle,
                         ::testing::Values(std::tuple{2ULL, 2U}, std::tuple{3ULL, 2U}, std::tuple{2ULL, 3U},
                                           std::tuple{3ULL, 3U}, std::tuple{2ULL, 4U}));

TEST(Group, ActionFixesOrMovesAsExpected) {
  const auto params = BuildingParams::make(2, 3);
  const LatticeClass root = standard_class(params);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(act(random_sl_word(params, 6, rng), root), root);

  const unsigned exps[] = {2, 1, 0};
  const GroupElement d = GroupElement::diagonal(params, exps);
  EXPECT_EQ(d.det_valuation(), 3U);
  EXPECT_EQ(oracle::building_distance(root.basis(), act(d, root).basis(), 2), 2U);

  const std::size_t perm[] = {1, 2, 0};
  const GroupElement s = GroupElement::permutation(params, perm);
  const long long e[] = {0, 1, 0};
  const long long moved[] = {0, 0, 1};
  EXPECT_EQ(act(s, diagonal_class(params, e)), diagonal_class(params, moved));
}

TEST(Group, ConstructionAndPrecisionErrors) {
  const auto params = BuildingParams::make(2, 2);
  try {
    GroupElement::make(params, IntMatrix{{3, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommensurable);
  }
  EXPECT_THROW(GroupElement::make(params, IntMatrix{{1, 1}, {1, 1}}), Error);
  const GroupElement big = GroupElement::make(params, IntMatrix{{1, 1000}, {0, 1}});
  try {
    act(big, standard_class(params), BigInt(10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionOverflow);
  }
}
