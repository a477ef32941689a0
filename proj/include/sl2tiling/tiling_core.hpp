#pragma once

// Finite windows of SL2-tilings and the integer identities they satisfy.
//
// Coordinates are absolute: (i, j) with i increasing downwards and j to the
// right. Row i of a tiling corresponds to the upper strip vertex i°, column j
// to the lower vertex j∘.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tiling/bigint.hpp"
#include "sl2tiling/strip_model.hpp"

namespace sl2 {

struct Cell {
  std::int64_t row = 0;
  std::int64_t col = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& cell);

// Raised when a window is structurally unusable for an operation (too small)
// or internally inconsistent (determinant-derived values disagree).
class InvalidWindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TilingWindow {
 public:
  // `values` is row-major over rows x cols. Throws std::invalid_argument on a
  // shape mismatch, an empty range, or an entry below 1.
  TilingWindow(IndexRange rows, IndexRange cols, std::vector<BigInt> values);

  const IndexRange& rows() const { return rows_; }
  const IndexRange& cols() const { return cols_; }
  std::int64_t height() const { return rows_.size(); }
  std::int64_t width() const { return cols_.size(); }

  bool contains(std::int64_t i, std::int64_t j) const { return rows_.contains(i) && cols_.contains(j); }
  // Throws std::out_of_range outside the window.
  const BigInt& at(std::int64_t i, std::int64_t j) const;
  const std::vector<BigInt>& values() const { return values_; }

  // Restriction to a sub-rectangle; throws std::out_of_range if not inside.
  TilingWindow crop(IndexRange rows, IndexRange cols) const;

  bool operator==(const TilingWindow&) const = default;

 private:
  IndexRange rows_;
  IndexRange cols_;
  std::vector<BigInt> values_;
};

struct DeterminantViolation {
  Cell top_left;
  BigInt determinant;
};

// Every adjacent 2x2 block whose determinant is not 1.
std::vector<DeterminantViolation> check_determinants(const TilingWindow& w);

struct DerivedValue {
  enum class Kind { C, D };
  Kind kind;
  std::int64_t i = 0;
  std::int64_t j = 0;
  BigInt value;
};

// c_ij: the determinant of rows i < j over two adjacent columns a, a+1.
// d_ij: the determinant of columns i < j over two adjacent rows a, a+1.
// Evaluated at every admissible a in the window; throws InvalidWindowError
// if the window is too narrow or if the values disagree, and
// std::invalid_argument unless i < j both lie in the window.
DerivedValue c_value(const TilingWindow& w, std::int64_t i, std::int64_t j);
DerivedValue d_value(const TilingWindow& w, std::int64_t i, std::int64_t j);

struct PtolemyOptions {
  // Above this many tuples per identity family, check a seeded uniform
  // sample of this size instead of all of them.
  std::uint64_t tuple_cap = 100000;
  std::uint64_t seed = 0x5eed;
};

struct PtolemyViolation {
  std::string identity;  // "c-crossing", "d-crossing", "c-connecting", ...
  std::vector<std::int64_t> indices;
  BigInt lhs;
  BigInt rhs;
};

struct PtolemyReport {
  std::uint64_t internal_checked = 0;    // c_ik c_jl = c_ij c_kl + c_il c_jk and d-analogue
  std::uint64_t mixed_checked = 0;       // t_ja c_ik = t_ia c_jk + t_ka c_ij and d-analogue
  std::uint64_t connecting_checked = 0;  // 2x2 minor over rows i<j, cols p<q = c_ij d_pq
  std::uint64_t positivity_checked = 0;  // c, d >= 1
  bool sampled = false;
  std::vector<PtolemyViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Throws InvalidWindowError when no instance of any identity fits, or when a
// derived value is inconsistent across the auxiliary index.
PtolemyReport ptolemy_report(const TilingWindow& w, const PtolemyOptions& options = {});

struct CellPair {
  Cell first;
  Cell second;
};

// Pairs of ones in (<,<) / (>,>) relative position.
std::vector<CellPair> ones_quadrant_check(const TilingWindow& w);

struct RepeatedValueViolation {
  Cell first;           // equal entries, first before second
  Cell second;
  Cell first_neighbour;  // the cells one row (or column) away that must be ordered
  Cell second_neighbour;
};

// For equal entries t_ij = t_ik (j < k) in a row: t_{i-1,j} > t_{i-1,k} and
// t_{i+1,j} < t_{i+1,k} wherever those rows exist; the column analogue with
// columns j-1 and j+1.
std::vector<RepeatedValueViolation> repeated_value_check(const TilingWindow& w);

struct Linearization {
  // row_coefficients[k] belongs to row rows().first + 1 + k: the g with
  // g * R_i = R_{i-1} + R_{i+1}; it equals c_{i-1,i+1}.
  std::vector<BigInt> row_coefficients;
  // column_coefficients[k] belongs to column cols().first + 1 + k: the g with
  // g * C_j = C_{j-1} + C_{j+1}; it equals d_{j-1,j+1}.
  std::vector<BigInt> column_coefficients;
};

// Throws InvalidWindowError if a ratio is non-integral, varies along the
// line, or disagrees with c / d, or if the window is below 3 in both
// directions.
Linearization linearization_coefficients(const TilingWindow& w);

// Raised by determinant_fill with the cell where filling failed.
class FillError : public std::runtime_error {
 public:
  enum class Reason { Unsolvable, InexactDivision, NonPositive, Inconsistent, BadSeed };
  FillError(Reason reason, Cell cell, const std::string& message);
  Reason reason() const { return reason_; }
  const Cell& cell() const { return cell_; }

 private:
  Reason reason_;
  Cell cell_;
};

// Completes a window from seed values using the unimodular rule on adjacent
// 2x2 blocks, each unknown cell solved from a block whose other three
// entries are known. Seeds may lie outside the requested window; the fill
// runs on the bounding box of both and the result is cropped.
TilingWindow determinant_fill(const std::map<Cell, BigInt>& seeds, IndexRange rows, IndexRange cols);

}  // namespace sl2
