#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "tourn/oracle.hpp"
#include "tourn/patterns.hpp"

using namespace tourn;

namespace {

Tournament directed_triangle() {
  std::vector<std::uint8_t> m{0, 1, 0, 0, 0, 1, 1, 0, 0};
  return Tournament::from_matrix(3, m);
}

// Best min(|A|, |B|) over every assignment of vertices to A, B or neither.
int all_pairs_optimum(const Tournament& t) {
  const int n = t.size();
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  int best = 0;
  for (int code = 0; code < total; ++code) {
    VertexList a, b;
    for (int v = 0, c = code; v < n; ++v, c /= 3) {
      if (c % 3 == 1) a.push_back(v);
      if (c % 3 == 2) b.push_back(v);
    }
    const int value = static_cast<int>(std::min(a.size(), b.size()));
    if (value > best && oracle::verify_complete_pair(t, a, b)) best = value;
  }
  return best;
}

}  // namespace

TEST(BruteC5, Examples) {
  EXPECT_TRUE(oracle::brute_c5(testsupport::c5()));
  EXPECT_FALSE(oracle::brute_c5(Tournament::transitive(10)));
  EXPECT_THROW(oracle::brute_c5(Tournament::transitive(15)), SizeLimitError);
}

TEST(BruteMaxPair, Examples) {
  const auto t8 = oracle::brute_max_pair(Tournament::transitive(8));
  EXPECT_EQ(t8.value, 4);
  EXPECT_TRUE(oracle::verify_complete_pair(Tournament::transitive(8), t8.a, t8.b));
  EXPECT_EQ(oracle::brute_max_pair(directed_triangle()).value, 1);
  EXPECT_EQ(oracle::brute_max_pair(testsupport::c5()).value, 1);
  EXPECT_THROW(oracle::brute_max_pair(Tournament::transitive(21)), SizeLimitError);
}

TEST(BruteMaxPair, CommonOutNeighbourhoodReductionIsLossless) {
  std::mt19937 rng(30);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto t = testsupport::std_random_tournament(n, rng);
    EXPECT_EQ(oracle::brute_max_pair(t).value, all_pairs_optimum(t));
  }
}

TEST(BruteTr, Examples) {
  EXPECT_EQ(oracle::brute_tr(Tournament::transitive(9)), 9);
  EXPECT_EQ(oracle::brute_tr(testsupport::c5()), 3);
  EXPECT_THROW(oracle::brute_tr(Tournament::transitive(15)), SizeLimitError);
}

TEST(VerifyCompletePair, Examples) {
  const auto t = Tournament::transitive(6);
  EXPECT_TRUE(oracle::verify_complete_pair(t, {0, 1, 2}, {3, 4, 5}));
  auto flipped = t;
  flipped.orient(4, 1);
  EXPECT_FALSE(oracle::verify_complete_pair(flipped, {0, 1, 2}, {3, 4, 5}));
  EXPECT_FALSE(oracle::verify_complete_pair(t, {}, {3}));
  EXPECT_FALSE(oracle::verify_complete_pair(t, {0, 3}, {3}));
  EXPECT_FALSE(oracle::verify_complete_pair(t, {0}, {6}));
}

TEST(VerifyC5Witness, Examples) {
  EXPECT_TRUE(oracle::verify_c5_witness(testsupport::c5(), C5Witness{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(oracle::verify_c5_witness(testsupport::c5(), C5Witness{{2, 3, 4, 0, 1}}));
  EXPECT_FALSE(oracle::verify_c5_witness(testsupport::c5(), C5Witness{{0, 2, 1, 3, 4}}));
  EXPECT_FALSE(oracle::verify_c5_witness(Tournament::transitive(7), C5Witness{{0, 1, 2, 3, 4}}));
  EXPECT_FALSE(oracle::verify_c5_witness(testsupport::c5(), C5Witness{{0, 0, 2, 3, 4}}));
}
