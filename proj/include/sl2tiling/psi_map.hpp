#pragma once

// Recovering a strip triangulation from a tiling window: the ones give the
// connecting arcs, and the column (or row) segment between two consecutive
// ones is the edge column of a frieze whose ones give the internal arcs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tiling/strip_model.hpp"
#include "sl2tiling/tiling_core.hpp"

namespace sl2 {

class ZigZagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Positions (x_alpha, y_alpha) of the ones in zig-zag order; points[k] has
// alpha = first_alpha + k. Cell::row is x, Cell::col is y.
struct ZigZag {
  std::int64_t first_alpha = 0;
  std::vector<Cell> points;
};

// Throws ZigZagError when the window holds fewer than two ones, when two ones
// sit in (<,<) or (>,>) position, or when the sorted ones do not alternate
// between column and row moves.
ZigZag extract_zigzag(const TilingWindow& w);

// Connecting arcs of every one and internal arcs of every polygon between two
// consecutive ones. The polygons before the first and after the last one are
// never complete inside a window. Throws ZigZagError or FriezeError on
// corrupt input.
FinitePatch psi_window(const TilingWindow& w);

struct RoundtripReport {
  std::vector<std::string> mismatches;
  std::size_t arcs_compared = 0;
  std::size_t cells_compared = 0;

  bool ok() const { return mismatches.empty(); }
};

// Generates the window, recovers the patch, and compares the patch with the
// spec's arcs in range and the regenerated entries with the window.
RoundtripReport roundtrip_check(const PeriodicTriangulationSpec& spec, IndexRange rows, IndexRange cols);

// The same for a window with no spec behind it: recovers the patch and
// regenerates every entry it brackets. Errors during recovery are reported,
// not thrown.
RoundtripReport roundtrip_window(const TilingWindow& w);

}  // namespace sl2
