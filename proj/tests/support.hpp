#pragma once

// Generators and oracles shared by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "sl2tiling/polygon_frieze.hpp"
#include "sl2tiling/strip_model.hpp"

namespace sl2::testing {

// Every triangulation of a polygon with `vertex_count` vertices.
std::vector<PolygonTriangulation> all_triangulations(std::size_t vertex_count);

PolygonTriangulation random_triangulation(std::size_t vertex_count, std::mt19937_64& rng);

// Random valid spec: period 2..max_period, steps of 1..max_step vertices on
// one edge, at least one step along each edge.
PeriodicTriangulationSpec random_spec(std::mt19937_64& rng, int max_period = 8, int max_step = 7);

// Crossing decided by drawing both arcs as polylines and intersecting the
// segments.
bool polylines_cross(const Arc& a, const Arc& b);

// Triangles at each label, counted directly from the triangle list.
std::vector<std::int64_t> triangle_counts(const PolygonTriangulation& pt);

}  // namespace sl2::testing
