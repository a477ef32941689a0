#pragma once

// Tiling values from a strip triangulation. The entry t_ij is the frieze
// value of the pair (i°, j∘) in the finite polygon cut out by two connecting
// arcs bracketing (i, j) on either side.

#include <cstdint>
#include <optional>
#include <vector>

#include "sl2tiling/bigint.hpp"
#include "sl2tiling/strip_model.hpp"
#include "sl2tiling/tiling_core.hpp"

namespace sl2 {

// Indices into a segment (or alphas of a spec) of the nearest connecting
// arcs with (x_lo, y_lo) in (>i, <j) and (x_hi, y_hi) in (<i, >j).
struct Bracket {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Bracket tightest_bracket(const PeriodicTriangulationSpec& spec, std::int64_t i, std::int64_t j);

// The polygon bounded by connecting[lo] and connecting[hi] of a segment,
// triangulated by everything between them. Labels run x_lo°, x_lo - 1°, ...,
// x_hi°, then y_hi∘, y_hi - 1∘, ..., y_lo∘.
struct CompositePolygon {
  PolygonTriangulation triangulation;
  std::int64_t x_lo = 0;
  std::int64_t x_hi = 0;
  std::int64_t y_lo = 0;
  std::int64_t y_hi = 0;

  std::size_t upper_label(std::int64_t x) const;
  std::size_t lower_label(std::int64_t y) const;
};

// `lo` and `hi` are positions in segment.connecting.
CompositePolygon composite_polygon(const StripSegment& segment, std::size_t lo, std::size_t hi);

// t_ij from a finite segment, using the tightest bracket inside it; nullopt
// when the segment has no bracketing pair for (i, j).
std::optional<BigInt> phi_from_segment(const StripSegment& segment, std::int64_t i, std::int64_t j);

// Reference value of one entry. Recomputes with the bracket widened by one
// arc on each side and throws std::logic_error if the two disagree.
BigInt phi_cell(const PeriodicTriangulationSpec& spec, std::int64_t i, std::int64_t j);

// The window seeded with per-cell values along its top row and left column
// and completed by determinant_fill. With `verify`, every entry is compared
// against phi_cell and a mismatch throws std::logic_error.
TilingWindow phi_window(const PeriodicTriangulationSpec& spec, IndexRange rows, IndexRange cols,
                        bool verify = false);

// Cells of `w` that differ from phi_cell.
std::vector<Cell> cells_differing_from_phi(const PeriodicTriangulationSpec& spec, const TilingWindow& w);

}  // namespace sl2
