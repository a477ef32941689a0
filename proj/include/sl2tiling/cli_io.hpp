#pragma once

// Plain-text formats.
//
//   spec:    period P dx dy / conn x y (P lines) / internal alpha upper|lower p q
//   window:  rows i0 i1 / cols j0 j1 / one line of tab-separated entries per row
//   seeds:   i j value, one per line
//   polygon: polygon N / diagonal a b
//
// '#' starts a comment; blank lines are ignored.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sl2tiling/phi_map.hpp"
#include "sl2tiling/polygon_frieze.hpp"
#include "sl2tiling/strip_model.hpp"
#include "sl2tiling/tiling_core.hpp"

namespace sl2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Syntax only; the result may fail validate_spec.
PeriodicTriangulationSpec parse_spec_document(std::string_view text);
// Syntax plus validation; throws SpecError with the full report.
PeriodicTriangulationSpec parse_spec(std::string_view text);
std::string emit_spec(const PeriodicTriangulationSpec& spec);

enum class WindowStyle { Tsv, Ascii };

TilingWindow parse_window(std::string_view text);
std::string emit_window(const TilingWindow& w, WindowStyle style = WindowStyle::Tsv);

std::map<Cell, BigInt> parse_seeds(std::string_view text);
std::string emit_seeds(const std::map<Cell, BigInt>& seeds);

PolygonTriangulation parse_polygon(std::string_view text);

// Spec-style listing of a recovered patch; `internal` lines count alpha from
// the first recovered connecting arc.
std::string emit_patch(const FinitePatch& patch);

}  // namespace sl2
