#pragma once

// Bundled data sets used by the demo subcommand and the tests.

#include <map>

#include "sl2tiling/strip_model.hpp"
#include "sl2tiling/tiling_core.hpp"

namespace sl2::fixtures {

// 11x11 block of a tiling with enough ones, anchored at (1, 1).
TilingWindow enough_ones_window();

// Central row and column 6 5 4 3 2 1 2 3 4 5 6 crossing at (0, 0).
std::map<Cell, BigInt> sparse_ones_seeds();
// The 11x11 fill of sparse_ones_seeds over rows and columns -5..5.
TilingWindow sparse_ones_window();

// Every polygon a triangle: conn (0,0), (0,1), shift (-1, 1).
PeriodicTriangulationSpec staircase_spec();
// One quadrilateral per period: conn (0,0), (-2,0), shift (-2, 1), diagonal (-2°, 0°).
PeriodicTriangulationSpec square_spec();
// Period 4 with polygons of 4 to 5 vertices on both edges.
PeriodicTriangulationSpec period4_spec();

}  // namespace sl2::fixtures
