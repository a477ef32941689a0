#include <gtest/gtest.h>

#include <random>

#include "sl2tiling/fixtures.hpp"
#include "sl2tiling/phi_map.hpp"
#include "sl2tiling/psi_map.hpp"
#include "support.hpp"

namespace sl2 {
namespace {

TilingWindow window(IndexRange rows, IndexRange cols, std::initializer_list<long> values) {
  std::vector<BigInt> v;
  for (long x : values) v.emplace_back(x);
  return TilingWindow(rows, cols, std::move(v));
}

TEST(ZigZag, EnoughOnesBlock) {
  const ZigZag zz = extract_zigzag(fixtures::enough_ones_window());
  EXPECT_EQ(zz.first_alpha, 0);
  EXPECT_EQ(zz.points, (std::vector<Cell>{{11, 1}, {11, 4}, {7, 4}, {5, 4}, {5, 6}, {5, 11}, {1, 11}}));
}

TEST(ZigZag, SingleOneIsNotEnough) {
  try {
    extract_zigzag(fixtures::sparse_ones_window());
    FAIL() << "expected ZigZagError";
  } catch (const ZigZagError& e) {
    EXPECT_NE(std::string(e.what()).find("enough ones"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("(0,0)"), std::string::npos);
  }
}

TEST(ZigZag, Errors) {
  EXPECT_THROW(extract_zigzag(window({0, 0}, {0, 1}, {2, 3})), ZigZagError);
  EXPECT_THROW(extract_zigzag(window({0, 1}, {0, 1}, {1, 2, 3, 1})), ZigZagError);
  // Ones at (0,1) and (2,0): no quadrant clash but not a single zig-zag step.
  EXPECT_THROW(extract_zigzag(window({0, 2}, {0, 1}, {3, 1, 4, 2, 1, 5})), ZigZagError);
}

TEST(ZigZag, CropsGiveContiguousStretches) {
  const auto full = extract_zigzag(fixtures::enough_ones_window()).points;
  const auto part = extract_zigzag(fixtures::enough_ones_window().crop({4, 11}, {3, 8})).points;
  EXPECT_EQ(part, (std::vector<Cell>{{11, 4}, {7, 4}, {5, 4}, {5, 6}}));
  auto it = std::search(full.begin(), full.end(), part.begin(), part.end());
  EXPECT_NE(it, full.end());
}

TEST(Psi, StaircaseRecoversTheStaircase) {
  const auto spec = fixtures::staircase_spec();
  const auto patch = psi_window(phi_window(spec, {-5, 5}, {-5, 5}));
  EXPECT_TRUE(patch.internal.empty());
  EXPECT_FALSE(patch.leading_complete);
  EXPECT_FALSE(patch.trailing_complete);
  ASSERT_FALSE(patch.connecting.empty());
  for (const Arc& arc : patch.connecting) EXPECT_TRUE(arc.first() + arc.second() == 0 || arc.first() + arc.second() == 1);
  EXPECT_EQ(patch.connecting.size(), 21u);  // 11 cells with i + j = 0, 10 with i + j = 1
}

TEST(Psi, SquareSpecRecoversItsDiagonal) {
  const auto spec = fixtures::square_spec();
  const auto patch = psi_window(phi_window(spec, {-6, 3}, {-3, 4}));
  std::vector<Arc> expected;
  for (std::int64_t alpha = -10; alpha <= 10; ++alpha) {
    for (const Arc& a : internal_arcs_at(spec, alpha)) {
      // certified only when both bounding ones are in the window
      const Arc from = connecting_arc_at(spec, alpha);
      const Arc to = connecting_arc_at(spec, alpha + 1);
      if (from.first() <= 3 && to.first() >= -6 && from.second() >= -3 && to.second() <= 4) expected.push_back(a);
    }
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(patch.internal, expected);
  EXPECT_FALSE(expected.empty());
}

TEST(Psi, EnoughOnesBlockRegenerates) {
  const auto w = fixtures::enough_ones_window();
  const auto patch = psi_window(w);
  EXPECT_EQ(patch.connecting.size(), 7u);
  const auto report = roundtrip_window(w);
  EXPECT_TRUE(report.ok()) << report.mismatches.front();
  EXPECT_GT(report.cells_compared, 20u);
}

TEST(Psi, CorruptedWindowIsReported) {
  const auto spec = fixtures::period4_spec();
  const auto w = phi_window(spec, {-8, 7}, {-8, 7});
  for (std::size_t k : {0u, 37u, 100u, 255u}) {
    auto values = w.values();
    values[k] += 1;
    const auto report = roundtrip_window(TilingWindow(w.rows(), w.cols(), values));
    EXPECT_FALSE(report.ok());
  }
}

TEST(Psi, BadSegmentRaisesFriezeError) {
  // Ones at (2,0) and (0,0) around a column segment 1 4 1 that is no frieze.
  const auto w = window({0, 2}, {0, 1}, {1, 2, 4, 9, 1, 2});
  EXPECT_THROW(psi_window(w), FriezeError);
}

TEST(Roundtrip, Fixtures) {
  EXPECT_TRUE(roundtrip_check(fixtures::staircase_spec(), {-10, 9}, {-10, 9}).ok());
  EXPECT_TRUE(roundtrip_check(fixtures::square_spec(), {-10, 9}, {-10, 9}).ok());
  const auto report = roundtrip_check(fixtures::period4_spec(), {-15, 14}, {-15, 14});
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.arcs_compared, 10u);
  EXPECT_GT(report.cells_compared, 100u);
}

TEST(Roundtrip, RandomSpecs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = testing::random_spec(rng);
    const Arc& a = spec.connecting.front();
    const auto report = roundtrip_check(spec, {a.first() - 10, a.first() + 9}, {a.second() - 10, a.second() + 9});
    ASSERT_TRUE(report.ok()) << report.mismatches.front();
  }
}

}  // namespace
}  // namespace sl2
