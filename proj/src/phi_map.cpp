#include "sl2tiling/phi_map.hpp"

#include <stdexcept>

namespace sl2 {

Bracket tightest_bracket(const PeriodicTriangulationSpec& spec, std::int64_t i, std::int64_t j) {
  // Along the staircase x never increases and y never decreases, so both
  // conditions switch once.
  const std::int64_t lo =
      first_alpha_where(spec, [&](const Arc& a) { return a.first() <= i || a.second() >= j; }) - 1;
  const std::int64_t hi = first_alpha_where(spec, [&](const Arc& a) { return a.first() < i && a.second() > j; });
  return {lo, hi};
}

std::size_t CompositePolygon::upper_label(std::int64_t x) const {
  if (x > x_lo || x < x_hi) throw std::out_of_range("upper vertex outside the polygon");
  return static_cast<std::size_t>(x_lo - x);
}

std::size_t CompositePolygon::lower_label(std::int64_t y) const {
  if (y < y_lo || y > y_hi) throw std::out_of_range("lower vertex outside the polygon");
  return static_cast<std::size_t>((x_lo - x_hi + 1) + (y_hi - y));
}

namespace {

CompositePolygon build_composite(const StripSegment& segment, std::size_t lo, std::size_t hi) {
  const Arc& from = segment.connecting.at(lo);
  const Arc& to = segment.connecting.at(hi);
  const std::int64_t x_lo = from.first();
  const std::int64_t y_lo = from.second();
  const std::int64_t x_hi = to.first();
  const std::int64_t y_hi = to.second();
  const auto count = static_cast<std::size_t>((x_lo - x_hi + 1) + (y_hi - y_lo + 1));
  auto upper = [&](std::int64_t x) { return static_cast<std::size_t>(x_lo - x); };
  auto lower = [&](std::int64_t y) { return static_cast<std::size_t>((x_lo - x_hi + 1) + (y_hi - y)); };

  std::vector<Diagonal> diagonals;
  for (std::size_t k = lo + 1; k < hi; ++k) {
    const Arc& arc = segment.connecting[k];
    diagonals.push_back({upper(arc.first()), lower(arc.second())});
  }
  for (std::size_t k = lo; k < hi; ++k) {
    for (const Arc& arc : segment.polygons.at(k).internal_arcs()) {
      if (arc.kind() == ArcKind::UpperInternal) {
        diagonals.push_back({upper(arc.first()), upper(arc.second())});
      } else {
        diagonals.push_back({lower(arc.first()), lower(arc.second())});
      }
    }
  }
  return CompositePolygon{PolygonTriangulation(count, std::move(diagonals)), x_lo, x_hi, y_lo, y_hi};
}

}  // namespace

CompositePolygon composite_polygon(const StripSegment& segment, std::size_t lo, std::size_t hi) {
  if (lo >= hi || hi >= segment.connecting.size()) {
    throw std::invalid_argument("composite polygon needs lo < hi inside the segment");
  }
  return build_composite(segment, lo, hi);
}

std::optional<BigInt> phi_from_segment(const StripSegment& segment, std::int64_t i, std::int64_t j) {
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  for (std::size_t k = 0; k < segment.connecting.size(); ++k) {
    const Arc& arc = segment.connecting[k];
    if (arc.first() > i && arc.second() < j) lo = k;
    if (!hi && arc.first() < i && arc.second() > j) hi = k;
  }
  if (!lo || !hi || *lo >= *hi) return std::nullopt;
  const CompositePolygon polygon = build_composite(segment, *lo, *hi);
  return frieze_value(polygon.triangulation, polygon.upper_label(i), polygon.lower_label(j));
}

namespace {

BigInt value_in(const PeriodicTriangulationSpec& spec, Bracket bracket, std::int64_t i, std::int64_t j) {
  const StripSegment segment = segment_of(spec, {bracket.lo, bracket.hi});
  const CompositePolygon polygon = build_composite(segment, 0, segment.connecting.size() - 1);
  return frieze_value(polygon.triangulation, polygon.upper_label(i), polygon.lower_label(j));
}

}  // namespace

BigInt phi_cell(const PeriodicTriangulationSpec& spec, std::int64_t i, std::int64_t j) {
  const Bracket tight = tightest_bracket(spec, i, j);
  BigInt value = value_in(spec, tight, i, j);
  BigInt wider = value_in(spec, {tight.lo - 1, tight.hi + 1}, i, j);
  if (value != wider) {
    throw std::logic_error("t(" + std::to_string(i) + "," + std::to_string(j) + ") depends on the bracket: " +
                           to_string(value) + " vs " + to_string(wider));
  }
  return value;
}

TilingWindow phi_window(const PeriodicTriangulationSpec& spec, IndexRange rows, IndexRange cols, bool verify) {
  if (rows.empty() || cols.empty()) throw std::invalid_argument("phi_window needs a non-empty window");
  auto seed_value = [&](std::int64_t i, std::int64_t j) {
    return value_in(spec, tightest_bracket(spec, i, j), i, j);
  };
  std::map<Cell, BigInt> seeds;
  for (std::int64_t j = cols.first; j <= cols.last; ++j) seeds.emplace(Cell{rows.first, j}, seed_value(rows.first, j));
  for (std::int64_t i = rows.first + 1; i <= rows.last; ++i) seeds.emplace(Cell{i, cols.first}, seed_value(i, cols.first));
  TilingWindow window = determinant_fill(seeds, rows, cols);
  if (verify) {
    const std::vector<Cell> bad = cells_differing_from_phi(spec, window);
    if (!bad.empty()) {
      throw std::logic_error("filled window disagrees with per-cell values at " + to_string(bad.front()) + " and " +
                             std::to_string(bad.size() - 1) + " other cells");
    }
  }
  return window;
}

std::vector<Cell> cells_differing_from_phi(const PeriodicTriangulationSpec& spec, const TilingWindow& w) {
  std::vector<Cell> bad;
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
    for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) {
      if (w.at(i, j) != phi_cell(spec, i, j)) bad.push_back({i, j});
    }
  }
  return bad;
}

}  // namespace sl2
