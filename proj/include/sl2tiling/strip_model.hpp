#pragma once

// Vertices and arcs of the infinite strip, and periodically presented
// triangulations of it.
//
// Upper vertices p° sit at horizontal position -p, lower vertices q∘ at +q:
// the two edges are numbered in opposite directions. A connecting arc joins
// i° to j∘; internal arcs join two vertices of one edge that are at least two
// apart.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tiling/polygon_frieze.hpp"

namespace sl2 {

enum class Edge { Upper, Lower };

struct Vertex {
  Edge edge = Edge::Upper;
  std::int64_t index = 0;

  std::int64_t position() const { return edge == Edge::Upper ? -index : index; }
  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

enum class ArcKind { Connecting, UpperInternal, LowerInternal };

class Arc {
 public:
  // (i°, j∘); no ordering constraint.
  static Arc connecting(std::int64_t i, std::int64_t j);
  // (p°, q°) and (p∘, q∘); throw std::invalid_argument unless p <= q - 2.
  static Arc upper(std::int64_t p, std::int64_t q);
  static Arc lower(std::int64_t p, std::int64_t q);

  ArcKind kind() const { return kind_; }
  // Connecting: first = upper index i, second = lower index j.
  // Internal: first = p < second = q.
  std::int64_t first() const { return first_; }
  std::int64_t second() const { return second_; }

  Vertex start() const;
  Vertex end() const;

  auto operator<=>(const Arc&) const = default;

 private:
  Arc(ArcKind kind, std::int64_t first, std::int64_t second)
      : kind_(kind), first_(first), second_(second) {}

  ArcKind kind_;
  std::int64_t first_;
  std::int64_t second_;
};

std::string to_string(const Arc& arc);

// True iff the arcs intersect in the open strip. Arcs meeting only at an
// endpoint do not cross; the relation is symmetric and irreflexive.
bool arcs_cross(const Arc& a, const Arc& b);

struct Shift {
  std::int64_t dx = 0;
  std::int64_t dy = 0;
  auto operator<=>(const Shift&) const = default;
};

Arc shifted(const Arc& arc, const Shift& shift, std::int64_t times);

// A_0 .. A_{P-1} plus the translation taking A_0 to A_P. Polygon alpha lies
// between A_alpha and A_{alpha+1}; `internal[alpha]` triangulates it.
struct PeriodicTriangulationSpec {
  std::vector<Arc> connecting;
  Shift shift;
  std::vector<std::vector<Arc>> internal;

  std::size_t period() const { return connecting.size(); }
  bool operator==(const PeriodicTriangulationSpec&) const = default;
};

struct SpecIssue {
  enum class Kind {
    Malformed,         // wrong sizes, non-connecting arcs in the staircase
    ShiftSign,         // dx < 0 < dy violated
    Staircase,         // consecutive connecting arcs do not share an endpoint correctly
    Crossing,          // two arcs of the unrolled arc set cross
    ArcOutsidePolygon, // internal arc not a diagonal of its polygon
    Triangulation,     // polygon not fully triangulated
  };
  Kind kind;
  std::string message;
  std::vector<Arc> witnesses;
};

using ValidationReport = std::vector<SpecIssue>;

std::string to_string(SpecIssue::Kind kind);

// Every violated invariant; empty iff the spec presents a triangulation of
// the strip.
ValidationReport validate_spec(const PeriodicTriangulationSpec& spec);

class SpecError : public std::runtime_error {
 public:
  explicit SpecError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Throws SpecError carrying the report when validation fails.
void require_valid(const PeriodicTriangulationSpec& spec);

// Inclusive integer interval; empty when last < first.
struct IndexRange {
  std::int64_t first = 0;
  std::int64_t last = -1;

  bool empty() const { return last < first; }
  std::int64_t size() const { return empty() ? 0 : last - first + 1; }
  bool contains(std::int64_t k) const { return first <= k && k <= last; }
  auto operator<=>(const IndexRange&) const = default;
};

// A_alpha for any integer alpha; alpha = 0 is the first arc of the
// fundamental segment.
Arc connecting_arc_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha);
std::vector<Arc> connecting_arcs_in(const PeriodicTriangulationSpec& spec, IndexRange alphas);
std::vector<Arc> internal_arcs_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha);

// Smallest alpha where the monotone predicate turns true. Requires a
// predicate that is false for very negative alpha and true for very large.
std::int64_t first_alpha_where(const PeriodicTriangulationSpec& spec,
                               const std::function<bool(const Arc&)>& pred);

// The polygon between two consecutive connecting arcs, with vertex labels
// mapped back to the strip. When the step moves along the upper edge
// (x decreases), label 0 is the shared lower vertex and labels 1..n run
// x_alpha°, x_alpha - 1°, ..., x_{alpha+1}°. When it moves along the lower
// edge, label 0 is the shared upper vertex and labels 1..n run
// y_{alpha+1}∘, ..., y_alpha∘.
struct StripPolygon {
  PolygonTriangulation triangulation;
  std::vector<Vertex> vertices;

  // Label of a strip vertex; throws std::out_of_range if absent.
  std::size_t label_of(const Vertex& v) const;
  std::vector<Arc> internal_arcs() const;
};

// Builds the polygon bounded by `from` and `to` (consecutive staircase arcs)
// carrying `internal` as its diagonals. Throws std::invalid_argument if the
// arcs are not consecutive or the internal arcs do not triangulate it.
StripPolygon make_strip_polygon(const Arc& from, const Arc& to, const std::vector<Arc>& internal);

StripPolygon polygon_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha);

// A finite stretch of a strip triangulation: connecting arcs
// A_first .. A_last and the triangulated polygons between them.
struct StripSegment {
  std::int64_t first_alpha = 0;
  std::vector<Arc> connecting;
  std::vector<StripPolygon> polygons;  // connecting.size() - 1 entries
};

StripSegment segment_of(const PeriodicTriangulationSpec& spec, IndexRange alphas);

// Groups loose internal arcs by the polygon that contains them.
StripSegment make_segment(std::int64_t first_alpha, std::vector<Arc> connecting,
                          const std::vector<Arc>& internal);

// Number of triangles incident with a strip vertex.
std::int64_t vertex_triangle_count(const PeriodicTriangulationSpec& spec, const Vertex& v);

// Finite image of the inverse construction on a window. Only arcs whose
// certifying data lies in the window are present; the polygons before the
// first and after the last connecting arc reach past the window, and the
// flags record whether they could be certified.
struct FinitePatch {
  std::vector<Arc> connecting;
  std::vector<Arc> internal;
  bool leading_complete = false;
  bool trailing_complete = false;
};

StripSegment segment_of(const FinitePatch& patch);

}  // namespace sl2
