#include <gtest/gtest.h>

#include <random>
#include <set>

#include "btlab/error.hpp"
#include "btlab/prints.hpp"

using namespace btlab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Prints, SizesFollowGaussianBinomials) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 2);
  for (VertexId v = 0; v < b.size(); ++v) {
    if (!b.is_interior(v)) continue;
    const Print p = print_of(b, v);
    EXPECT_EQ(p.members.size(), b.type(v) == 0 ? 1U : 7U);
    if (b.type(v) == 0) EXPECT_EQ(p.members, std::vector<VertexId>{v});
    for (VertexId m : p.members) EXPECT_EQ(b.type(m), 0);
  }
  EXPECT_EQ(expected_print_size(BuildingParams::make(3, 4), 2), 130U);
}

TEST(Prints, InjectiveAndRoundTrip) {
  for (auto [p, n, r] : {std::tuple{2ULL, 2U, 4U}, std::tuple{3ULL, 2U, 3U}, std::tuple{2ULL, 3U, 2U},
                         std::tuple{3ULL, 3U, 2U}}) {
    const BuildingBall b = generate_ball(BuildingParams::make(p, n), r);
    std::set<Print> seen;
    for (VertexId v = 0; v < b.size(); ++v) {
      if (!b.is_interior(v)) continue;
      const Print print = print_of(b, v);
      EXPECT_TRUE(seen.insert(print).second);
      EXPECT_EQ(source_of(b, print.members), v);
      EXPECT_EQ(source_within(b, print.members, r - 1), v);
    }
  }
}

TEST(Prints, PartialBoundaryStarsAreNotAttributedToTheBoundary) {
  // At radius 2 the root is the only interior type-0 vertex.
  for (unsigned rho : {3U, 4U}) {
    const BuildingBall b = generate_ball(BuildingParams::make(2, 3), rho);
    std::size_t checked = 0;
    for (VertexId c = 0; c < b.size(); ++c) {
      if (b.is_interior(c) || b.type(c) == 0) continue;
      std::vector<VertexId> star;
      bool touches_interior = false;
      for (VertexId w : b.graph().neighbors(c)) {
        if (b.type(w) != 0) continue;
        star.push_back(w);
        touches_interior |= b.is_interior(w);
      }
      if (!touches_interior) continue;
      EXPECT_LT(star.size(), expected_print_size(b.params(), b.type(c)));
      try {
        EXPECT_NE(source_of(b, star), c);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAPrint);
      }
      ++checked;
    }
    EXPECT_GT(checked, 0U);
  }
}

TEST(Prints, Errors) {
  const BuildingBall b = generate_ball(BuildingParams::make(2, 3), 2);
  VertexId boundary = 0;
  VertexId far_type0 = 0;
  for (VertexId v = 0; v < b.size(); ++v) {
    if (b.dist_root(v) == 2 && b.type(v) == 0) far_type0 = v;
  }
  for (VertexId v = 0; v < b.size(); ++v) {
    if (!b.is_interior(v)) boundary = v;
  }
  ASSERT_NE(far_type0, 0U);
  EXPECT_EQ(kind_of([&] { print_of(b, boundary); }), ErrorKind::BoundaryVertex);
  EXPECT_EQ(kind_of([&] { print_of(b, 100000); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { source_of(b, std::vector<VertexId>{}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { source_of(b, std::vector<VertexId>{1}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { source_of(b, std::vector<VertexId>{far_type0}); }), ErrorKind::BoundaryVertex);
  EXPECT_EQ(kind_of([&] { source_of(b, std::vector<VertexId>{0, far_type0}); }), ErrorKind::NotAPrint);
  const Print p1 = print_of(b, 1);
  const std::vector<VertexId> partial(p1.members.begin(), p1.members.end() - 1);
  EXPECT_EQ(kind_of([&] { source_of(b, partial); }), ErrorKind::NotAPrint);
  EXPECT_EQ(kind_of([&] { source_within(b, p1.members, 2); }), ErrorKind::InvalidInput);
}

TEST(Prints, EquivarianceUnderWords) {
  for (auto [p, n] : {std::pair{2ULL, 2U}, std::pair{3ULL, 2U}, std::pair{2ULL, 3U}}) {
    const auto params = BuildingParams::make(p, n);
    const BuildingBall b = generate_ball(params, 3);
    std::mt19937_64 rng(99);
    std::vector<VertexId> interior;
    for (VertexId v = 0; v < b.size(); ++v) {
      if (b.is_interior(v)) interior.push_back(v);
    }
    for (int s = 0; s < 20; ++s) {
      const GroupElement g = random_sl_word(params, 1 + rng() % 6, rng);
      const EquivarianceReport r = equivariance_check(b, g, interior);
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.checked, interior.size());
    }
  }
}

TEST(Prints, EquivarianceUnderTranslations) {
  // Type-preserving diagonal elements move the root, unlike SL_n(Z) words.
  const auto p2 = BuildingParams::make(2, 2);
  const BuildingBall b2 = generate_ball(p2, 4);
  const unsigned shift2[] = {2, 0};
  const GroupElement t2 = GroupElement::diagonal(p2, shift2);
  std::vector<VertexId> near2;
  for (VertexId v = 0; v < b2.size(); ++v) {
    if (b2.dist_root(v) <= 1) near2.push_back(v);
  }
  EXPECT_TRUE(equivariance_check(b2, t2, near2).ok());

  const auto p3 = BuildingParams::make(2, 3);
  const BuildingBall b3 = generate_ball(p3, 4);
  const unsigned shift3[] = {1, 2, 0};
  const std::size_t perm[] = {2, 0, 1};
  const GroupElement t3 = GroupElement::diagonal(p3, shift3) * GroupElement::permutation(p3, perm);
  std::vector<VertexId> near3;
  for (VertexId v = 0; v < b3.size(); ++v) {
    if (b3.dist_root(v) <= 1) near3.push_back(v);
  }
  const EquivarianceReport r3 = equivariance_check(b3, t3, near3);
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.checked, near3.size());
}

TEST(Prints, EquivarianceErrors) {
  const auto params = BuildingParams::make(2, 2);
  const BuildingBall b = generate_ball(params, 3);
  const VertexId root[] = {0};
  const unsigned odd[] = {1, 0};
  EXPECT_EQ(kind_of([&] { equivariance_check(b, GroupElement::diagonal(params, odd), root); }),
            ErrorKind::InvalidInput);
  const unsigned far[] = {6, 0};
  EXPECT_EQ(kind_of([&] { equivariance_check(b, GroupElement::diagonal(params, far), root); }), ErrorKind::OutOfBall);
}
