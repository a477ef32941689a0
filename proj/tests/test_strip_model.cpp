#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sl2tiling/fixtures.hpp"
#include "sl2tiling/strip_model.hpp"
#include "support.hpp"

namespace sl2 {
namespace {

bool has_issue(const ValidationReport& report, SpecIssue::Kind kind) {
  return std::any_of(report.begin(), report.end(), [&](const SpecIssue& s) { return s.kind == kind; });
}

std::vector<Arc> arcs_in_box(std::int64_t lo, std::int64_t hi) {
  std::vector<Arc> arcs;
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t b = lo; b <= hi; ++b) {
      arcs.push_back(Arc::connecting(a, b));
      if (a <= b - 2) {
        arcs.push_back(Arc::upper(a, b));
        arcs.push_back(Arc::lower(a, b));
      }
    }
  }
  return arcs;
}

TEST(Arc, Construction) {
  EXPECT_THROW(Arc::upper(0, 1), std::invalid_argument);
  EXPECT_THROW(Arc::lower(3, 1), std::invalid_argument);
  EXPECT_NO_THROW(Arc::connecting(5, -7));
  const Arc a = Arc::upper(-2, 0);
  EXPECT_EQ(a.start(), (Vertex{Edge::Upper, -2}));
  EXPECT_EQ(a.end(), (Vertex{Edge::Upper, 0}));
  EXPECT_EQ((Vertex{Edge::Upper, 3}).position(), -3);
  EXPECT_EQ((Vertex{Edge::Lower, 3}).position(), 3);
}

TEST(Crossing, WorkedExamples) {
  EXPECT_TRUE(arcs_cross(Arc::connecting(2, 3), Arc::upper(1, 4)));
  EXPECT_FALSE(arcs_cross(Arc::connecting(2, 3), Arc::lower(0, 2)));
  EXPECT_TRUE(arcs_cross(Arc::connecting(0, 0), Arc::connecting(1, 1)));
  EXPECT_FALSE(arcs_cross(Arc::connecting(0, 0), Arc::connecting(1, -1)));
  EXPECT_FALSE(arcs_cross(Arc::upper(0, 3), Arc::lower(0, 3)));
  EXPECT_FALSE(arcs_cross(Arc::upper(0, 3), Arc::upper(3, 6)));
}

TEST(Crossing, AgreesWithPolylineOracleOnBox) {
  const auto arcs = arcs_in_box(-6, 6);
  for (const Arc& a : arcs) {
    ASSERT_FALSE(arcs_cross(a, a));
    for (const Arc& b : arcs) {
      ASSERT_EQ(arcs_cross(a, b), testing::polylines_cross(a, b)) << to_string(a) << " x " << to_string(b);
      ASSERT_EQ(arcs_cross(a, b), arcs_cross(b, a));
    }
  }
}

TEST(Validate, StaircaseIsValid) { EXPECT_TRUE(validate_spec(fixtures::staircase_spec()).empty()); }

TEST(Validate, FixturesAreValid) {
  EXPECT_TRUE(validate_spec(fixtures::square_spec()).empty());
  EXPECT_TRUE(validate_spec(fixtures::period4_spec()).empty());
}

TEST(Validate, ShiftSign) {
  PeriodicTriangulationSpec spec{{Arc::connecting(0, 0)}, {0, 1}, {{}}};
  EXPECT_TRUE(has_issue(validate_spec(spec), SpecIssue::Kind::ShiftSign));
}

TEST(Validate, CrossingConnectingArcs) {
  PeriodicTriangulationSpec spec{{Arc::connecting(0, 0), Arc::connecting(1, 1)}, {-1, 1}, {{}, {}}};
  const auto report = validate_spec(spec);
  ASSERT_TRUE(has_issue(report, SpecIssue::Kind::Crossing));
  const auto it = std::find_if(report.begin(), report.end(),
                               [](const SpecIssue& s) { return s.kind == SpecIssue::Kind::Crossing; });
  EXPECT_EQ(it->witnesses.size(), 2u);
}

TEST(Validate, UnderTriangulatedPolygon) {
  PeriodicTriangulationSpec spec{{Arc::connecting(0, 0), Arc::connecting(-2, 0)}, {-2, 1}, {{}, {}}};
  EXPECT_TRUE(has_issue(validate_spec(spec), SpecIssue::Kind::Triangulation));
}

TEST(Validate, ArcOutsideItsPolygon) {
  PeriodicTriangulationSpec spec{{Arc::connecting(0, 0), Arc::connecting(-2, 0)}, {-2, 1},
                                 {{Arc::upper(-2, 0)}, {Arc::lower(5, 9)}}};
  EXPECT_TRUE(has_issue(validate_spec(spec), SpecIssue::Kind::ArcOutsidePolygon));
}

TEST(Validate, StaircaseShape) {
  PeriodicTriangulationSpec spec{{Arc::connecting(0, 0), Arc::connecting(-1, 1)}, {-2, 2}, {{}, {}}};
  EXPECT_TRUE(has_issue(validate_spec(spec), SpecIssue::Kind::Staircase));
  PeriodicTriangulationSpec empty{{}, {-1, 1}, {}};
  EXPECT_TRUE(has_issue(validate_spec(empty), SpecIssue::Kind::Malformed));
  EXPECT_THROW(require_valid(empty), SpecError);
}

TEST(Validate, RandomSpecsAreValid) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = testing::random_spec(rng);
    const auto report = validate_spec(spec);
    ASSERT_TRUE(report.empty()) << report.front().message;
  }
}

TEST(Unrolling, StaircaseExamples) {
  const auto spec = fixtures::staircase_spec();
  EXPECT_EQ(connecting_arcs_in(spec, {0, 3}),
            (std::vector<Arc>{Arc::connecting(0, 0), Arc::connecting(0, 1), Arc::connecting(-1, 1),
                              Arc::connecting(-1, 2)}));
  EXPECT_EQ(connecting_arcs_in(spec, {-2, -1}), (std::vector<Arc>{Arc::connecting(1, -1), Arc::connecting(1, 0)}));
  EXPECT_EQ(connecting_arcs_in(spec, {0, 0}), (std::vector<Arc>{spec.connecting[0]}));
  EXPECT_TRUE(connecting_arcs_in(spec, {3, 2}).empty());
}

TEST(Unrolling, InternalArcsShiftWithTheirPolygon) {
  const auto spec = fixtures::square_spec();
  EXPECT_EQ(internal_arcs_at(spec, 2), (std::vector<Arc>{Arc::upper(-4, -2)}));
  EXPECT_EQ(internal_arcs_at(spec, -2), (std::vector<Arc>{Arc::upper(0, 2)}));
  EXPECT_TRUE(internal_arcs_at(spec, 1).empty());
}

TEST(Polygon, StaircaseTriangles) {
  const auto spec = fixtures::staircase_spec();
  for (std::int64_t alpha = -3; alpha <= 3; ++alpha) {
    const auto polygon = polygon_at(spec, alpha);
    EXPECT_EQ(polygon.triangulation.vertex_count(), 3u);
    EXPECT_TRUE(polygon.triangulation.diagonals().empty());
  }
}

TEST(Polygon, SquareSpecQuadrilateral) {
  const auto polygon = polygon_at(fixtures::square_spec(), 0);
  EXPECT_EQ(polygon.vertices, (std::vector<Vertex>{{Edge::Lower, 0}, {Edge::Upper, 0}, {Edge::Upper, -1},
                                                   {Edge::Upper, -2}}));
  ASSERT_EQ(polygon.triangulation.diagonals().size(), 1u);
  EXPECT_EQ(polygon.triangulation.diagonals()[0], (Diagonal{1, 3}));
  EXPECT_EQ(polygon.internal_arcs(), (std::vector<Arc>{Arc::upper(-2, 0)}));
  EXPECT_EQ(polygon.label_of({Edge::Upper, -1}), 2u);
  EXPECT_THROW(polygon.label_of({Edge::Lower, 7}), std::out_of_range);
}

TEST(Polygon, VertexCountIsGapPlusTwo) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto spec = testing::random_spec(rng);
    for (std::int64_t alpha = -4; alpha < 4; ++alpha) {
      const Arc a = connecting_arc_at(spec, alpha);
      const Arc b = connecting_arc_at(spec, alpha + 1);
      const auto gap = (a.first() - b.first()) + (b.second() - a.second());
      EXPECT_EQ(polygon_at(spec, alpha).triangulation.vertex_count(), static_cast<std::size_t>(gap + 2));
    }
  }
}

TEST(Polygon, RejectsNonConsecutiveArcs) {
  EXPECT_THROW(make_strip_polygon(Arc::connecting(0, 0), Arc::connecting(-1, 1), {}), std::invalid_argument);
  EXPECT_THROW(make_strip_polygon(Arc::connecting(0, 0), Arc::connecting(-2, 0), {}), std::invalid_argument);
}

TEST(Segment, GroupsLooseArcs) {
  const auto spec = fixtures::period4_spec();
  const auto reference = segment_of(spec, {0, 4});
  std::vector<Arc> loose;
  for (std::int64_t alpha = 0; alpha < 4; ++alpha) {
    for (const Arc& a : internal_arcs_at(spec, alpha)) loose.push_back(a);
  }
  std::reverse(loose.begin(), loose.end());
  const auto rebuilt = make_segment(0, reference.connecting, loose);
  ASSERT_EQ(rebuilt.polygons.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(rebuilt.polygons[k].internal_arcs(), reference.polygons[k].internal_arcs());
  }
  EXPECT_THROW(make_segment(0, reference.connecting, {Arc::upper(40, 50)}), std::invalid_argument);
}

TEST(Witnesses, EveryCellIsBracketed) {
  // Connecting arcs exist in both quadrants (<i,>j) and (>i,<j).
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = testing::random_spec(rng);
    const auto arcs = connecting_arcs_in(spec, {-200, 200});
    for (std::int64_t i = -10; i <= 10; ++i) {
      for (std::int64_t j = -10; j <= 10; ++j) {
        EXPECT_TRUE(std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.first() < i && a.second() > j; }));
        EXPECT_TRUE(std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.first() > i && a.second() < j; }));
      }
    }
  }
}

TEST(Maximality, EveryOtherArcCrossesSomething) {
  for (const auto& spec : {fixtures::staircase_spec(), fixtures::square_spec(), fixtures::period4_spec()}) {
    std::vector<Arc> present = connecting_arcs_in(spec, {-40, 40});
    for (std::int64_t alpha = -40; alpha < 40; ++alpha) {
      for (const Arc& a : internal_arcs_at(spec, alpha)) present.push_back(a);
    }
    for (const Arc& candidate : arcs_in_box(-6, 6)) {
      if (std::find(present.begin(), present.end(), candidate) != present.end()) continue;
      EXPECT_TRUE(std::any_of(present.begin(), present.end(), [&](const Arc& a) { return arcs_cross(a, candidate); }))
          << to_string(candidate);
    }
  }
}

TEST(TriangleCount, MatchesPolygonQuiddities) {
  const auto spec = fixtures::period4_spec();
  for (std::int64_t x = -8; x <= 3; ++x) {
    std::int64_t total = 0;
    for (std::int64_t alpha = -8; alpha <= 8; ++alpha) {
      const auto polygon = polygon_at(spec, alpha);
      const auto counts = testing::triangle_counts(polygon.triangulation);
      for (std::size_t k = 0; k < polygon.vertices.size(); ++k) {
        if (polygon.vertices[k] == Vertex{Edge::Upper, x}) total += counts[k];
      }
    }
    EXPECT_EQ(vertex_triangle_count(spec, {Edge::Upper, x}), total) << x;
  }
}

}  // namespace
}  // namespace sl2
