#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "sl2tiling/fixtures.hpp"
#include "sl2tiling/phi_map.hpp"
#include "support.hpp"

namespace sl2 {
namespace {

bool is_connecting_arc(const PeriodicTriangulationSpec& spec, std::int64_t i, std::int64_t j) {
  const auto arcs = connecting_arcs_in(spec, {-400, 400});
  return std::find(arcs.begin(), arcs.end(), Arc::connecting(i, j)) != arcs.end();
}

// Window rows and columns centred on A_0.
std::pair<IndexRange, IndexRange> around_origin(const PeriodicTriangulationSpec& spec, std::int64_t radius) {
  const Arc& a = spec.connecting.front();
  return {{a.first() - radius, a.first() + radius - 1}, {a.second() - radius, a.second() + radius - 1}};
}

TEST(Phi, StaircaseIsAFunctionOfTheAntiDiagonal) {
  // Ones where i + j is 0 or 1; f(s + 2) f(s) = f(s + 1)^2 + 1 on either side.
  std::map<std::int64_t, BigInt> f{{0, 1}, {1, 1}};
  for (std::int64_t s = 1; s < 12; ++s) f[s + 1] = (f[s] * f[s] + 1) / f[s - 1];
  for (std::int64_t s = 0; s > -12; --s) f[s - 1] = (f[s] * f[s] + 1) / f[s + 1];
  const auto w = phi_window(fixtures::staircase_spec(), {-5, 5}, {-5, 5});
  for (std::int64_t i = -5; i <= 5; ++i) {
    for (std::int64_t j = -5; j <= 5; ++j) ASSERT_EQ(w.at(i, j), f.at(i + j)) << i << "," << j;
  }
  EXPECT_EQ(phi_cell(fixtures::staircase_spec(), 1, 1), 2);
}

TEST(Phi, SquareSpecInteriorCell) {
  const auto spec = fixtures::square_spec();
  EXPECT_EQ(phi_cell(spec, -1, 0), 2);
  EXPECT_EQ(phi_cell(spec, 0, 0), 1);
  EXPECT_EQ(phi_cell(spec, -2, 0), 1);
}

TEST(Phi, OneByOneWindowAtAnArc) {
  const auto w = phi_window(fixtures::period4_spec(), {-3, -3}, {2, 2});
  EXPECT_EQ(w.values(), std::vector<BigInt>{1});
}

TEST(Phi, OnesAreExactlyTheConnectingArcs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = testing::random_spec(rng);
    const auto [rows, cols] = around_origin(spec, 8);
    const auto w = phi_window(spec, rows, cols);
    for (std::int64_t i = rows.first; i <= rows.last; ++i) {
      for (std::int64_t j = cols.first; j <= cols.last; ++j) {
        ASSERT_EQ(w.at(i, j) == 1, is_connecting_arc(spec, i, j)) << i << "," << j;
      }
    }
  }
}

TEST(Phi, WiderBracketsGiveTheSameValue) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = testing::random_spec(rng);
    for (std::int64_t i = -6; i <= 6; i += 3) {
      for (std::int64_t j = -6; j <= 6; j += 3) {
        const BigInt expected = phi_cell(spec, i, j);
        const Bracket b = tightest_bracket(spec, i, j);
        for (std::int64_t extra = 1; extra <= 4; ++extra) {
          const auto segment = segment_of(spec, {b.lo - extra, b.hi + 2 * extra});
          const auto polygon = composite_polygon(segment, 0, segment.connecting.size() - 1);
          ASSERT_EQ(frieze_value(polygon.triangulation, polygon.upper_label(i), polygon.lower_label(j)), expected);
        }
      }
    }
  }
}

TEST(Phi, SegmentPathAgreesWithCells) {
  const auto spec = fixtures::period4_spec();
  const auto segment = segment_of(spec, {-6, 6});
  for (std::int64_t i = -8; i <= 8; ++i) {
    for (std::int64_t j = -8; j <= 8; ++j) {
      const auto value = phi_from_segment(segment, i, j);
      if (value) EXPECT_EQ(*value, phi_cell(spec, i, j));
    }
  }
  EXPECT_FALSE(phi_from_segment(segment, 1000, 0).has_value());
}

TEST(Phi, GeneratedWindowsPassEveryCheck) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = testing::random_spec(rng);
    const auto [rows, cols] = around_origin(spec, 6);
    const auto w = phi_window(spec, rows, cols);
    EXPECT_TRUE(check_determinants(w).empty());
    EXPECT_TRUE(ones_quadrant_check(w).empty());
    EXPECT_TRUE(repeated_value_check(w).empty());
    EXPECT_TRUE(ptolemy_report(w).ok());
    const auto lin = linearization_coefficients(w);
    for (std::size_t k = 0; k < lin.row_coefficients.size(); ++k) {
      const std::int64_t i = rows.first + 1 + static_cast<std::int64_t>(k);
      ASSERT_EQ(lin.row_coefficients[k], vertex_triangle_count(spec, {Edge::Upper, i}));
    }
    for (std::size_t k = 0; k < lin.column_coefficients.size(); ++k) {
      const std::int64_t j = cols.first + 1 + static_cast<std::int64_t>(k);
      ASSERT_EQ(lin.column_coefficients[k], vertex_triangle_count(spec, {Edge::Lower, j}));
    }
  }
}

TEST(Phi, TranslationByTheShift) {
  const auto spec = fixtures::period4_spec();
  const auto w = phi_window(spec, {-6, 6}, {-6, 6});
  const auto moved = phi_window(spec, {-6 + spec.shift.dx, 6 + spec.shift.dx}, {-6 + spec.shift.dy, 6 + spec.shift.dy});
  EXPECT_EQ(w.values(), moved.values());
}

TEST(Phi, VerifyModeAndMismatchReport) {
  const auto spec = fixtures::period4_spec();
  const auto w = phi_window(spec, {-7, 7}, {-7, 7}, true);
  EXPECT_TRUE(cells_differing_from_phi(spec, w).empty());
  auto values = w.values();
  values[17] += 1;
  const TilingWindow corrupt(w.rows(), w.cols(), values);
  EXPECT_EQ(cells_differing_from_phi(spec, corrupt), (std::vector<Cell>{{-6, -5}}));
}

TEST(Phi, LargeWindowIsFast) {
  const auto start = std::chrono::steady_clock::now();
  const auto w = phi_window(fixtures::period4_spec(), {-50, 49}, {-50, 49});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(w.height(), 100);
  EXPECT_LT(seconds, 1.0);
}

TEST(Composite, LabelsAndErrors) {
  const auto segment = segment_of(fixtures::square_spec(), {0, 2});
  const auto polygon = composite_polygon(segment, 0, 2);
  // 0°, -1°, -2°, then 1∘, 0∘
  EXPECT_EQ(polygon.triangulation.vertex_count(), 5u);
  EXPECT_EQ(polygon.upper_label(-1), 1u);
  EXPECT_EQ(polygon.lower_label(0), 4u);
  EXPECT_THROW(polygon.upper_label(3), std::out_of_range);
  EXPECT_THROW(composite_polygon(segment, 2, 2), std::invalid_argument);
}

}  // namespace
}  // namespace sl2
