#pragma once

// Conway-Coxeter frieze kernel for triangulated polygons.
//
// A polygon with N = n + 1 vertices is labelled 0..n cyclically. Its frieze
// is stored on the diagonal band of grid points (row, col) with
// 1 <= col - row <= n; the entry at (row, col) is the frieze value of the
// vertex pair (row mod N, col mod N). Both band edges carry 1s and every
// adjacent 2x2 block inside the band has determinant 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tiling/bigint.hpp"

namespace sl2 {

// Raised when a frieze computation meets data that cannot come from a
// triangulated polygon: inexact division, non-positive entries, or a set of
// ones that is not a triangulation.
class FriezeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Diagonal {
  std::size_t a = 0;  // a < b after normalisation
  std::size_t b = 0;
  auto operator<=>(const Diagonal&) const = default;
};

struct Triangle {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
};

// Everything wrong with `diagonals` as a full triangulation of a
// `vertex_count`-gon. Empty means valid.
std::vector<std::string> triangulation_problems(std::size_t vertex_count,
                                                std::span<const Diagonal> diagonals);

class PolygonTriangulation {
 public:
  // Diagonals may be given in either orientation; they are normalised and
  // sorted. Throws std::invalid_argument listing the problems otherwise.
  PolygonTriangulation(std::size_t vertex_count, std::vector<Diagonal> diagonals);

  std::size_t vertex_count() const { return vertex_count_; }
  // Largest vertex label; the polygon is an (n+1)-gon.
  std::size_t n() const { return vertex_count_ - 1; }
  std::span<const Diagonal> diagonals() const { return diagonals_; }

  bool has_diagonal(std::size_t a, std::size_t b) const;
  bool is_edge(std::size_t a, std::size_t b) const;

  // Triangles found by repeatedly clipping ears.
  std::vector<Triangle> triangles() const;

  bool operator==(const PolygonTriangulation&) const = default;

 private:
  std::size_t vertex_count_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

class Quiddity {
 public:
  // Checks: at least 3 entries, all >= 1, sum 3(N - 2), two or more 1s.
  explicit Quiddity(std::vector<std::int64_t> counts);

  std::span<const std::int64_t> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t k) const { return counts_[k]; }
  bool operator==(const Quiddity&) const = default;

 private:
  std::vector<std::int64_t> counts_;
};

// Number of triangles at each vertex.
Quiddity quiddity_of(const PolygonTriangulation& pt);

// K() = 1, K(x) = x, K(x1..xm) = xm K(x1..x(m-1)) - K(x1..x(m-2)).
// Throws FriezeError if an input or any partial continuant is <= 0.
BigInt continuant(std::span<const std::int64_t> values);

// Frieze value of the vertex pair (a, b): the continuant of the quiddity
// entries strictly between a and b going a+1, a+2, ... cyclically.
// Adjacent vertices give 1. Throws std::invalid_argument if a == b or a label
// is out of range.
BigInt frieze_value(const Quiddity& q, std::size_t a, std::size_t b);
BigInt frieze_value(const PolygonTriangulation& pt, std::size_t a, std::size_t b);

class FriezeGrid {
 public:
  // `columns[k]` holds column `first_col + k` from its top edge down, i.e. the
  // entries (c - n, c), ..., (c - 1, c). Used by the propagation routines.
  FriezeGrid(std::size_t width, std::int64_t first_col, std::vector<std::vector<BigInt>> columns);

  // The band width n; the frieze belongs to an (n+1)-gon.
  std::size_t width() const { return width_; }
  std::size_t polygon_size() const { return width_ + 1; }
  std::int64_t first_col() const { return first_col_; }
  std::int64_t last_col() const {
    return first_col_ + static_cast<std::int64_t>(columns_.size()) - 1;
  }

  bool contains(std::int64_t row, std::int64_t col) const;
  // nullptr when (row, col) is not stored.
  const BigInt* find(std::int64_t row, std::int64_t col) const;
  // Throws std::out_of_range when (row, col) is not stored.
  const BigInt& at(std::int64_t row, std::int64_t col) const;

  // Entries of column `col` from the top edge down.
  std::span<const BigInt> column(std::int64_t col) const;

 private:
  std::size_t width_;
  std::int64_t first_col_;
  std::vector<std::vector<BigInt>> columns_;
};

// Grows the frieze from one edge-to-edge column v1..vn (v1 = vn = 1) placed
// at column 0, so v_k is the value of the vertex pair (k, 0). Columns 0..n+1
// are produced: one full fundamental period plus one column of overlap.
// Throws FriezeError (with the grid point) on inexact division or a
// non-positive entry, and std::invalid_argument on malformed input.
FriezeGrid frieze_from_boundary_column(std::span<const BigInt> column);

// Frieze of `pt` seeded from the column of vertex `anchor`; grid labels are
// then shifted by `anchor`, so entry (r, c) is the value of
// ((anchor + r) mod N, (anchor + c) mod N).
FriezeGrid frieze_of(const PolygonTriangulation& pt, std::size_t anchor = 0);

// Interior ones of the frieze read back as diagonals (labels as in
// frieze_from_boundary_column). Throws FriezeError when the ones do not form
// n - 2 pairwise non-crossing diagonals.
PolygonTriangulation triangulation_from_ones(const FriezeGrid& grid);

struct GlideMismatch {
  std::int64_t row = 0;
  std::int64_t col = 0;
  BigInt value;
  BigInt reflected;  // value at (col, row + n + 1)
};

// Checks F(i, j) = F(j, i + n + 1) at every stored pair.
std::vector<GlideMismatch> glide_mismatches(const FriezeGrid& grid);

// Edge entries that are not 1 and in-band 2x2 blocks whose determinant is
// not 1, as readable messages.
std::vector<std::string> frieze_grid_problems(const FriezeGrid& grid);

}  // namespace sl2
