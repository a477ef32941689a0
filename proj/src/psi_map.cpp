#include "sl2tiling/psi_map.hpp"

#include <algorithm>

#include "sl2tiling/phi_map.hpp"

namespace sl2 {

ZigZag extract_zigzag(const TilingWindow& w) {
  std::vector<Cell> ones;
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
    for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) {
      if (w.at(i, j) == 1) ones.push_back({i, j});
    }
  }
  if (ones.empty()) throw ZigZagError("the window contains no entry equal to 1");
  if (ones.size() == 1) {
    throw ZigZagError("the only 1 in the window is at " + to_string(ones.front()) +
                      "; the zig-zag has no continuation inside the window, so the tiling may not have enough ones");
  }
  const auto crossings = ones_quadrant_check(w);
  if (!crossings.empty()) {
    throw ZigZagError("ones at " + to_string(crossings.front().first) + " and " +
                      to_string(crossings.front().second) + " lie in (<,<) position");
  }
  std::sort(ones.begin(), ones.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  });
  for (std::size_t k = 0; k + 1 < ones.size(); ++k) {
    const Cell& a = ones[k];
    const Cell& b = ones[k + 1];
    const bool column_move = b.row < a.row && b.col == a.col;
    const bool row_move = b.row == a.row && b.col > a.col;
    if (!column_move && !row_move) {
      throw ZigZagError("ones at " + to_string(a) + " and " + to_string(b) + " are not joined by a zig-zag step");
    }
  }
  return ZigZag{0, std::move(ones)};
}

namespace {

// Internal arcs of the polygon between consecutive ones a and b.
std::vector<Arc> recover_polygon(const TilingWindow& w, const Cell& a, const Cell& b) {
  const bool along_upper = b.row < a.row;
  const std::int64_t high = along_upper ? a.row : b.col;
  const std::int64_t low = along_upper ? b.row : a.col;
  std::vector<BigInt> column;
  for (std::int64_t k = high; k >= low; --k) column.push_back(along_upper ? w.at(k, a.col) : w.at(a.row, k));
  std::vector<Arc> arcs;
  const std::string where = "between the ones at " + to_string(a) + " and " + to_string(b);
  try {
    const PolygonTriangulation pt = triangulation_from_ones(frieze_from_boundary_column(column));
    for (std::size_t k = 1; k <= column.size(); ++k) {
      if (frieze_value(pt, k, 0) != column[k - 1]) {
        throw FriezeError("recovered polygon does not reproduce entry " + std::to_string(k));
      }
    }
    for (const Diagonal& d : pt.diagonals()) {
      if (d.a == 0) throw FriezeError("segment has an interior 1 that is not on the zig-zag");
      // label k is strip index high - k + 1
      const std::int64_t p = high - static_cast<std::int64_t>(d.b) + 1;
      const std::int64_t q = high - static_cast<std::int64_t>(d.a) + 1;
      arcs.push_back(along_upper ? Arc::upper(p, q) : Arc::lower(p, q));
    }
  } catch (const FriezeError& e) {
    throw FriezeError(std::string("segment ") + where + " is not a frieze column: " + e.what());
  }
  return arcs;
}

}  // namespace

FinitePatch psi_window(const TilingWindow& w) {
  const ZigZag zz = extract_zigzag(w);
  FinitePatch patch;
  for (const Cell& p : zz.points) patch.connecting.push_back(Arc::connecting(p.row, p.col));
  for (std::size_t k = 0; k + 1 < zz.points.size(); ++k) {
    for (const Arc& arc : recover_polygon(w, zz.points[k], zz.points[k + 1])) patch.internal.push_back(arc);
  }
  std::sort(patch.internal.begin(), patch.internal.end());
  return patch;
}

namespace {

void compare_entries(const TilingWindow& w, const FinitePatch& patch, RoundtripReport& report) {
  const StripSegment segment = segment_of(patch);
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
    for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) {
      const auto value = phi_from_segment(segment, i, j);
      if (!value) continue;
      ++report.cells_compared;
      if (*value != w.at(i, j)) {
        report.mismatches.push_back("entry " + to_string(Cell{i, j}) + " is " + to_string(w.at(i, j)) +
                                    " but the recovered patch gives " + to_string(*value));
      }
    }
  }
}

void report_determinants(const TilingWindow& w, RoundtripReport& report) {
  for (const auto& v : check_determinants(w)) {
    report.mismatches.push_back("block at " + to_string(v.top_left) + " has determinant " + to_string(v.determinant));
  }
}

std::vector<Arc> sorted(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

RoundtripReport roundtrip_check(const PeriodicTriangulationSpec& spec, IndexRange rows, IndexRange cols) {
  RoundtripReport report;
  const TilingWindow w = phi_window(spec, rows, cols);
  report_determinants(w, report);
  FinitePatch patch;
  try {
    patch = psi_window(w);
  } catch (const std::exception& e) {
    report.mismatches.push_back(std::string("recovery failed: ") + e.what());
    return report;
  }

  // Locate the first recovered arc on the spec's staircase.
  const Arc& first = patch.connecting.front();
  const std::int64_t alpha0 = first_alpha_where(spec, [&](const Arc& a) {
    return a.second() > first.second() || (a.second() == first.second() && a.first() <= first.first());
  });
  const auto count = static_cast<std::int64_t>(patch.connecting.size());
  for (std::int64_t k = -1; k <= count; ++k) {
    const Arc expected = connecting_arc_at(spec, alpha0 + k);
    const bool inside = rows.contains(expected.first()) && cols.contains(expected.second());
    if (k < 0 || k == count) {
      if (inside) report.mismatches.push_back("spec arc " + to_string(expected) + " is in the window but was not recovered");
      continue;
    }
    ++report.arcs_compared;
    const Arc& got = patch.connecting[static_cast<std::size_t>(k)];
    if (got != expected) {
      report.mismatches.push_back("connecting arc " + std::to_string(k) + " recovered as " + to_string(got) +
                                  ", spec has " + to_string(expected));
    }
  }
  if (report.ok()) {
    const StripSegment recovered = segment_of(patch);
    for (std::size_t k = 0; k < recovered.polygons.size(); ++k) {
      const auto expected = sorted(internal_arcs_at(spec, alpha0 + static_cast<std::int64_t>(k)));
      const auto got = recovered.polygons[k].internal_arcs();
      report.arcs_compared += expected.size();
      if (got != expected) {
        report.mismatches.push_back("internal arcs of polygon " + std::to_string(alpha0 + static_cast<std::int64_t>(k)) +
                                    " differ from the spec");
      }
    }
  }
  compare_entries(w, patch, report);
  return report;
}

RoundtripReport roundtrip_window(const TilingWindow& w) {
  RoundtripReport report;
  report_determinants(w, report);
  FinitePatch patch;
  try {
    patch = psi_window(w);
  } catch (const std::exception& e) {
    report.mismatches.push_back(std::string("recovery failed: ") + e.what());
    return report;
  }
  report.arcs_compared = patch.connecting.size() + patch.internal.size();
  compare_entries(w, patch, report);
  return report;
}

}  // namespace sl2
