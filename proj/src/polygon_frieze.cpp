#include "sl2tiling/polygon_frieze.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace sl2 {

namespace {

Diagonal normalised(Diagonal d) {
  if (d.a > d.b) std::swap(d.a, d.b);
  return d;
}

std::string describe(const Diagonal& d) {
  std::ostringstream os;
  os << "(" << d.a << "," << d.b << ")";
  return os.str();
}

std::string describe_point(std::int64_t row, std::int64_t col) {
  std::ostringstream os;
  os << "(" << row << "," << col << ")";
  return os.str();
}

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

std::vector<std::string> triangulation_problems(std::size_t vertex_count,
                                                std::span<const Diagonal> diagonals) {
  std::vector<std::string> problems;
  if (vertex_count < 3) {
    problems.push_back("a polygon needs at least 3 vertices, got " + std::to_string(vertex_count));
    return problems;
  }
  const std::size_t n = vertex_count - 1;

  std::vector<Diagonal> sorted;
  sorted.reserve(diagonals.size());
  for (const Diagonal& raw : diagonals) {
    Diagonal d = normalised(raw);
    if (d.b > n) {
      problems.push_back("diagonal " + describe(d) + " has a vertex outside 0.." + std::to_string(n));
    } else if (d.b < d.a + 2 || (d.a == 0 && d.b == n)) {
      problems.push_back("diagonal " + describe(d) + " is an edge or degenerate");
    } else {
      sorted.push_back(d);
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Diagonal& x, const Diagonal& y) {
    return x.a != y.a ? x.a < y.a : x.b > y.b;
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) problems.push_back("diagonal " + describe(sorted[k]) + " is repeated");
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Laminar scan: with (a asc, b desc) order, a crossing shows up as a
  // diagonal that starts inside the innermost open one but ends beyond it.
  std::vector<Diagonal> open;
  for (const Diagonal& d : sorted) {
    while (!open.empty() && open.back().b <= d.a) open.pop_back();
    if (!open.empty() && d.b > open.back().b) {
      problems.push_back("diagonals " + describe(open.back()) + " and " + describe(d) + " cross");
      continue;
    }
    open.push_back(d);
  }

  if (diagonals.size() != n - 2) {
    problems.push_back("a " + std::to_string(vertex_count) + "-gon needs " + std::to_string(n - 2) +
                       " diagonals, got " + std::to_string(diagonals.size()));
  }
  return problems;
}

PolygonTriangulation::PolygonTriangulation(std::size_t vertex_count, std::vector<Diagonal> diagonals)
    : vertex_count_(vertex_count), diagonals_(std::move(diagonals)) {
  auto problems = triangulation_problems(vertex_count_, diagonals_);
  if (!problems.empty()) {
    std::string message = "invalid polygon triangulation:";
    for (const auto& p : problems) message += " " + p + ";";
    throw std::invalid_argument(message);
  }
  for (auto& d : diagonals_) d = normalised(d);
  std::sort(diagonals_.begin(), diagonals_.end());

  neighbours_.assign(vertex_count_, {});
  for (const auto& d : diagonals_) {
    neighbours_[d.a].push_back(d.b);
    neighbours_[d.b].push_back(d.a);
  }
  for (auto& list : neighbours_) std::sort(list.begin(), list.end());
}

bool PolygonTriangulation::has_diagonal(std::size_t a, std::size_t b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return false;
  const auto& list = neighbours_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool PolygonTriangulation::is_edge(std::size_t a, std::size_t b) const {
  if (a >= vertex_count_ || b >= vertex_count_ || a == b) return false;
  if (a > b) std::swap(a, b);
  return b == a + 1 || (a == 0 && b == vertex_count_ - 1);
}

std::vector<Triangle> PolygonTriangulation::triangles() const {
  const std::size_t count = vertex_count_;
  std::vector<std::size_t> prev(count), next(count);
  for (std::size_t v = 0; v < count; ++v) {
    prev[v] = (v + count - 1) % count;
    next[v] = (v + 1) % count;
  }
  std::vector<bool> removed(count, false);
  std::vector<std::size_t> candidates(count);
  std::iota(candidates.rbegin(), candidates.rend(), std::size_t{0});

  std::vector<Triangle> result;
  result.reserve(count - 2);
  std::size_t remaining = count;
  while (remaining > 3 && !candidates.empty()) {
    std::size_t v = candidates.back();
    candidates.pop_back();
    if (removed[v]) continue;
    std::size_t u = prev[v];
    std::size_t w = next[v];
    if (!has_diagonal(u, w)) continue;
    result.push_back({u, v, w});
    removed[v] = true;
    next[u] = w;
    prev[w] = u;
    --remaining;
    candidates.push_back(w);
    candidates.push_back(u);
  }
  if (remaining != 3) throw std::logic_error("ear decomposition stalled on a validated triangulation");
  std::size_t v = 0;
  while (removed[v]) ++v;
  result.push_back({prev[v], v, next[v]});
  return result;
}

Quiddity::Quiddity(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  const auto size = static_cast<std::int64_t>(counts_.size());
  if (size < 3) throw std::invalid_argument("a quiddity sequence needs at least 3 entries");
  std::int64_t sum = 0;
  std::int64_t ones = 0;
  for (auto c : counts_) {
    if (c < 1) throw std::invalid_argument("quiddity entries must be positive");
    sum += c;
    if (c == 1) ++ones;
  }
  if (sum != 3 * (size - 2)) {
    throw std::invalid_argument("quiddity sum " + std::to_string(sum) + " differs from " +
                                std::to_string(3 * (size - 2)));
  }
  if (ones < 2) throw std::invalid_argument("a quiddity sequence has at least two entries equal to 1");
}

Quiddity quiddity_of(const PolygonTriangulation& pt) {
  std::vector<std::int64_t> counts(pt.vertex_count(), 0);
  for (const Triangle& t : pt.triangles()) {
    ++counts[t.a];
    ++counts[t.b];
    ++counts[t.c];
  }
  return Quiddity(std::move(counts));
}

BigInt continuant(std::span<const std::int64_t> values) {
  BigInt before = 0;  // K of the prefix two shorter, with K(-1) = 0
  BigInt current = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] <= 0) {
      throw FriezeError("continuant input " + std::to_string(values[k]) + " at position " +
                        std::to_string(k) + " is not positive");
    }
    BigInt value = values[k] * current - before;
    if (value <= 0) {
      throw FriezeError("continuant prefix of length " + std::to_string(k + 1) + " is " +
                        to_string(value) + "; not a quiddity segment");
    }
    before = std::move(current);
    current = std::move(value);
  }
  return current;
}

BigInt frieze_value(const Quiddity& q, std::size_t a, std::size_t b) {
  const std::size_t count = q.size();
  if (a >= count || b >= count) throw std::invalid_argument("frieze_value: vertex out of range");
  if (a == b) throw std::invalid_argument("frieze_value: vertices must differ");
  std::vector<std::int64_t> between;
  for (std::size_t v = (a + 1) % count; v != b; v = (v + 1) % count) between.push_back(q[v]);
  return continuant(between);
}

BigInt frieze_value(const PolygonTriangulation& pt, std::size_t a, std::size_t b) {
  return frieze_value(quiddity_of(pt), a, b);
}

FriezeGrid::FriezeGrid(std::size_t width, std::int64_t first_col,
                       std::vector<std::vector<BigInt>> columns)
    : width_(width), first_col_(first_col), columns_(std::move(columns)) {
  for (const auto& column : columns_) {
    if (column.size() != width_) throw std::invalid_argument("frieze column length differs from band width");
  }
}

bool FriezeGrid::contains(std::int64_t row, std::int64_t col) const {
  if (col < first_col_ || col > last_col()) return false;
  const std::int64_t gap = col - row;
  return gap >= 1 && gap <= static_cast<std::int64_t>(width_);
}

const BigInt* FriezeGrid::find(std::int64_t row, std::int64_t col) const {
  if (!contains(row, col)) return nullptr;
  const auto& column = columns_[static_cast<std::size_t>(col - first_col_)];
  const std::int64_t top = col - static_cast<std::int64_t>(width_);
  return &column[static_cast<std::size_t>(row - top)];
}

const BigInt& FriezeGrid::at(std::int64_t row, std::int64_t col) const {
  const BigInt* entry = find(row, col);
  if (entry == nullptr) throw std::out_of_range("frieze grid has no entry at " + describe_point(row, col));
  return *entry;
}

std::span<const BigInt> FriezeGrid::column(std::int64_t col) const {
  if (col < first_col_ || col > last_col()) throw std::out_of_range("frieze grid has no column " + std::to_string(col));
  return columns_[static_cast<std::size_t>(col - first_col_)];
}

FriezeGrid frieze_from_boundary_column(std::span<const BigInt> column) {
  const std::size_t n = column.size();
  if (n < 2) throw std::invalid_argument("a boundary column needs at least two entries");
  if (column.front() != 1 || column.back() != 1) {
    throw std::invalid_argument("a boundary column must start and end with 1");
  }
  for (const BigInt& v : column) {
    if (v <= 0) throw std::invalid_argument("boundary column entries must be positive");
  }

  const auto width = static_cast<std::int64_t>(n);
  std::vector<std::vector<BigInt>> columns;
  columns.reserve(n + 2);
  columns.emplace_back(column.begin(), column.end());

  // Column c holds rows c-n .. c-1, so the entry (row, c) sits at index
  // row - c + n. Each new column is grown downwards from its top edge.
  for (std::int64_t c = 0; c <= width; ++c) {
    const auto& prev = columns.back();
    std::vector<BigInt> fresh(n);
    fresh[0] = 1;
    for (std::int64_t r = c + 1 - width; r <= c - 2; ++r) {
      const BigInt& corner = prev[static_cast<std::size_t>(r - c + width)];
      const BigInt& below = prev[static_cast<std::size_t>(r + 1 - c + width)];
      const BigInt& right = fresh[static_cast<std::size_t>(r - (c + 1) + width)];
      BigInt numerator = below * right + 1;
      auto value = exact_quotient(numerator, corner);
      if (!value) {
        throw FriezeError("frieze propagation: inexact division at grid point " +
                          describe_point(r + 1, c + 1) + " (" + to_string(numerator) + " / " +
                          to_string(corner) + ")");
      }
      if (*value <= 0) {
        throw FriezeError("frieze propagation: non-positive entry " + to_string(*value) +
                          " at grid point " + describe_point(r + 1, c + 1));
      }
      fresh[static_cast<std::size_t>(r + 1 - (c + 1) + width)] = std::move(*value);
    }
    fresh[n - 1] = 1;
    columns.push_back(std::move(fresh));
  }
  return FriezeGrid(n, 0, std::move(columns));
}

FriezeGrid frieze_of(const PolygonTriangulation& pt, std::size_t anchor) {
  const std::size_t count = pt.vertex_count();
  if (anchor >= count) throw std::invalid_argument("frieze_of: anchor out of range");
  const Quiddity q = quiddity_of(pt);
  std::vector<BigInt> seed;
  seed.reserve(count - 1);
  for (std::size_t k = 1; k < count; ++k) seed.push_back(frieze_value(q, (anchor + k) % count, anchor));
  return frieze_from_boundary_column(seed);
}

PolygonTriangulation triangulation_from_ones(const FriezeGrid& grid) {
  const std::size_t count = grid.polygon_size();
  const auto width = static_cast<std::int64_t>(grid.width());
  if (grid.first_col() > 0 || grid.last_col() < width - 1) {
    throw std::invalid_argument("frieze grid does not cover a fundamental region");
  }
  std::set<Diagonal> found;
  for (std::int64_t c = 0; c < width; ++c) {
    for (std::int64_t r = c - width + 1; r <= c - 2; ++r) {
      if (grid.at(r, c) != 1) continue;
      auto a = static_cast<std::size_t>(floor_mod(r, static_cast<std::int64_t>(count)));
      auto b = static_cast<std::size_t>(floor_mod(c, static_cast<std::int64_t>(count)));
      found.insert(normalised({a, b}));
    }
  }
  std::vector<Diagonal> diagonals(found.begin(), found.end());
  auto problems = triangulation_problems(count, diagonals);
  if (!problems.empty()) {
    std::string message = "frieze ones do not form a triangulation:";
    for (const auto& p : problems) message += " " + p + ";";
    throw FriezeError(message);
  }
  return PolygonTriangulation(count, std::move(diagonals));
}

std::vector<GlideMismatch> glide_mismatches(const FriezeGrid& grid) {
  std::vector<GlideMismatch> mismatches;
  const auto period = static_cast<std::int64_t>(grid.polygon_size());
  const auto width = static_cast<std::int64_t>(grid.width());
  for (std::int64_t c = grid.first_col(); c <= grid.last_col(); ++c) {
    for (std::int64_t r = c - width; r <= c - 1; ++r) {
      const BigInt* reflected = grid.find(c, r + period);
      if (reflected == nullptr) continue;
      const BigInt& value = grid.at(r, c);
      if (value != *reflected) mismatches.push_back({r, c, value, *reflected});
    }
  }
  return mismatches;
}

std::vector<std::string> frieze_grid_problems(const FriezeGrid& grid) {
  std::vector<std::string> problems;
  const auto width = static_cast<std::int64_t>(grid.width());
  for (std::int64_t c = grid.first_col(); c <= grid.last_col(); ++c) {
    for (std::int64_t r = c - width; r <= c - 1; ++r) {
      const BigInt& value = grid.at(r, c);
      if (value <= 0) problems.push_back("non-positive entry at " + describe_point(r, c));
      if ((r == c - width || r == c - 1) && value != 1) {
        problems.push_back("edge entry " + to_string(value) + " at " + describe_point(r, c));
      }
      const BigInt* right = grid.find(r, c + 1);
      const BigInt* below = grid.find(r + 1, c);
      const BigInt* diag = grid.find(r + 1, c + 1);
      if (right && below && diag) {
        BigInt det = value * *diag - *right * *below;
        if (det != 1) {
          problems.push_back("determinant " + to_string(det) + " at " + describe_point(r, c));
        }
      }
    }
  }
  return problems;
}

}  // namespace sl2
