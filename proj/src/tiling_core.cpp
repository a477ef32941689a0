#include "sl2tiling/tiling_core.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace sl2 {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

TilingWindow::TilingWindow(IndexRange rows, IndexRange cols, std::vector<BigInt> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_.empty() || cols_.empty()) throw std::invalid_argument("a tiling window needs at least one cell");
  if (static_cast<std::int64_t>(values_.size()) != rows_.size() * cols_.size()) {
    throw std::invalid_argument("window has " + std::to_string(values_.size()) + " values for a " +
                                std::to_string(rows_.size()) + "x" + std::to_string(cols_.size()) + " shape");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 1) {
      const auto w = static_cast<std::size_t>(cols_.size());
      Cell cell{rows_.first + static_cast<std::int64_t>(k / w), cols_.first + static_cast<std::int64_t>(k % w)};
      throw std::invalid_argument("window entry " + to_string(values_[k]) + " at " + to_string(cell) +
                                  " is not a positive integer");
    }
  }
}

const BigInt& TilingWindow::at(std::int64_t i, std::int64_t j) const {
  if (!contains(i, j)) throw std::out_of_range("cell " + to_string(Cell{i, j}) + " is outside the window");
  return values_[static_cast<std::size_t>((i - rows_.first) * cols_.size() + (j - cols_.first))];
}

TilingWindow TilingWindow::crop(IndexRange rows, IndexRange cols) const {
  if (rows.empty() || cols.empty() || !rows_.contains(rows.first) || !rows_.contains(rows.last) ||
      !cols_.contains(cols.first) || !cols_.contains(cols.last)) {
    throw std::out_of_range("crop rectangle is not inside the window");
  }
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(rows.size() * cols.size()));
  for (std::int64_t i = rows.first; i <= rows.last; ++i) {
    for (std::int64_t j = cols.first; j <= cols.last; ++j) values.push_back(at(i, j));
  }
  return TilingWindow(rows, cols, std::move(values));
}

std::vector<DeterminantViolation> check_determinants(const TilingWindow& w) {
  std::vector<DeterminantViolation> violations;
  for (std::int64_t i = w.rows().first; i < w.rows().last; ++i) {
    for (std::int64_t j = w.cols().first; j < w.cols().last; ++j) {
      BigInt det = w.at(i, j) * w.at(i + 1, j + 1) - w.at(i, j + 1) * w.at(i + 1, j);
      if (det != 1) violations.push_back({{i, j}, std::move(det)});
    }
  }
  return violations;
}

namespace {

BigInt minor(const TilingWindow& w, std::int64_t i, std::int64_t j, std::int64_t p, std::int64_t q) {
  return w.at(i, p) * w.at(j, q) - w.at(i, q) * w.at(j, p);
}

}  // namespace

DerivedValue c_value(const TilingWindow& w, std::int64_t i, std::int64_t j) {
  if (i >= j || !w.rows().contains(i) || !w.rows().contains(j)) {
    throw std::invalid_argument("c_value needs rows i < j inside the window");
  }
  if (w.width() < 2) throw InvalidWindowError("c_value needs at least two columns");
  std::optional<BigInt> common;
  for (std::int64_t a = w.cols().first; a < w.cols().last; ++a) {
    BigInt value = minor(w, i, j, a, a + 1);
    if (!common) {
      common = std::move(value);
    } else if (*common != value) {
      throw InvalidWindowError("c_{" + std::to_string(i) + "," + std::to_string(j) + "} is " + to_string(*common) +
                               " at column " + std::to_string(w.cols().first) + " but " + to_string(value) +
                               " at column " + std::to_string(a) + "; the window is not an SL2-tiling");
    }
  }
  return {DerivedValue::Kind::C, i, j, std::move(*common)};
}

DerivedValue d_value(const TilingWindow& w, std::int64_t i, std::int64_t j) {
  if (i >= j || !w.cols().contains(i) || !w.cols().contains(j)) {
    throw std::invalid_argument("d_value needs columns i < j inside the window");
  }
  if (w.height() < 2) throw InvalidWindowError("d_value needs at least two rows");
  std::optional<BigInt> common;
  for (std::int64_t a = w.rows().first; a < w.rows().last; ++a) {
    BigInt value = minor(w, a, a + 1, i, j);
    if (!common) {
      common = std::move(value);
    } else if (*common != value) {
      throw InvalidWindowError("d_{" + std::to_string(i) + "," + std::to_string(j) + "} is " + to_string(*common) +
                               " at row " + std::to_string(w.rows().first) + " but " + to_string(value) +
                               " at row " + std::to_string(a) + "; the window is not an SL2-tiling");
    }
  }
  return {DerivedValue::Kind::D, i, j, std::move(*common)};
}

namespace {

// Upper-triangular table of c (or d) values over 0-based line offsets.
class DerivedTable {
 public:
  DerivedTable(const TilingWindow& w, DerivedValue::Kind kind)
      : size_(static_cast<std::size_t>(kind == DerivedValue::Kind::C ? w.height() : w.width())),
        values_(size_ * size_) {
    const std::int64_t base = kind == DerivedValue::Kind::C ? w.rows().first : w.cols().first;
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = a + 1; b < size_; ++b) {
        const auto i = base + static_cast<std::int64_t>(a);
        const auto j = base + static_cast<std::int64_t>(b);
        values_[a * size_ + b] = kind == DerivedValue::Kind::C ? c_value(w, i, j).value : d_value(w, i, j).value;
      }
    }
  }
  const BigInt& operator()(std::size_t a, std::size_t b) const { return values_[a * size_ + b]; }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::vector<BigInt> values_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t m = 1; m <= k; ++m) result = result * (n - k + m) / m;
  return result;
}

// Calls visit(indices) for every sorted k-subset of [0, n), or for `cap`
// seeded uniform samples when there are more than `cap` of them.
template <typename Visit>
std::uint64_t for_each_subset(std::size_t n, std::size_t k, std::uint64_t cap, std::mt19937_64& rng,
                              bool& sampled, Visit&& visit) {
  const std::uint64_t total = binomial(n, k);
  std::vector<std::size_t> idx(k);
  if (total <= cap) {
    for (std::size_t m = 0; m < k; ++m) idx[m] = m;
    for (std::uint64_t count = 0; count < total; ++count) {
      visit(idx);
      // advance to the next combination
      std::size_t m = k;
      while (m > 0 && idx[m - 1] == n - k + m - 1) --m;
      if (m == 0) break;
      ++idx[m - 1];
      for (std::size_t r = m; r < k; ++r) idx[r] = idx[r - 1] + 1;
    }
    return total;
  }
  sampled = true;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t count = 0; count < cap; ++count) {
    std::set<std::size_t> chosen;
    while (chosen.size() < k) chosen.insert(pick(rng));
    std::copy(chosen.begin(), chosen.end(), idx.begin());
    visit(idx);
  }
  return cap;
}

std::vector<std::int64_t> absolute(const std::vector<std::size_t>& idx, std::int64_t base) {
  std::vector<std::int64_t> out;
  for (auto k : idx) out.push_back(base + static_cast<std::int64_t>(k));
  return out;
}

}  // namespace

PtolemyReport ptolemy_report(const TilingWindow& w, const PtolemyOptions& options) {
  if (w.height() < 2 || w.width() < 2) {
    throw InvalidWindowError("Ptolemy identities need a window of at least 2x2");
  }
  PtolemyReport report;
  std::mt19937_64 rng(options.seed);
  const DerivedTable c(w, DerivedValue::Kind::C);
  const DerivedTable d(w, DerivedValue::Kind::D);
  const std::int64_t r0 = w.rows().first;
  const std::int64_t c0 = w.cols().first;
  const auto h = static_cast<std::size_t>(w.height());
  const auto wd = static_cast<std::size_t>(w.width());
  auto t = [&](std::size_t a, std::size_t b) -> const BigInt& {
    return w.at(r0 + static_cast<std::int64_t>(a), c0 + static_cast<std::int64_t>(b));
  };

  for (const DerivedTable* table : {&c, &d}) {
    const char* name = table == &c ? "c" : "d";
    const std::int64_t base = table == &c ? r0 : c0;
    for (std::size_t a = 0; a < table->size(); ++a) {
      for (std::size_t b = a + 1; b < table->size(); ++b) {
        ++report.positivity_checked;
        if ((*table)(a, b) < 1) {
          report.violations.push_back({std::string(name) + "-positive",
                                       absolute({a, b}, base), (*table)(a, b), BigInt(1)});
        }
      }
    }
  }

  // Crossing internal arcs.
  for (const DerivedTable* table : {&c, &d}) {
    const std::string name = table == &c ? "c-crossing" : "d-crossing";
    const std::int64_t base = table == &c ? r0 : c0;
    if (table->size() < 4) continue;
    report.internal_checked += for_each_subset(table->size(), 4, options.tuple_cap, rng, report.sampled,
                                               [&](const std::vector<std::size_t>& x) {
      const auto& T = *table;
      BigInt lhs = T(x[0], x[2]) * T(x[1], x[3]);
      BigInt rhs = T(x[0], x[1]) * T(x[2], x[3]) + T(x[0], x[3]) * T(x[1], x[2]);
      if (lhs != rhs) report.violations.push_back({name, absolute(x, base), lhs, rhs});
    });
  }

  // Internal arc crossing a connecting arc: triples of lines times every
  // entry of the crossing line.
  if (h >= 3) {
    const std::uint64_t cap = std::max<std::uint64_t>(1, options.tuple_cap / wd);
    report.mixed_checked += wd * for_each_subset(h, 3, cap, rng, report.sampled,
                                                 [&](const std::vector<std::size_t>& x) {
      for (std::size_t a = 0; a < wd; ++a) {
        BigInt lhs = t(x[1], a) * c(x[0], x[2]);
        BigInt rhs = t(x[0], a) * c(x[1], x[2]) + t(x[2], a) * c(x[0], x[1]);
        if (lhs != rhs) {
          auto idx = absolute(x, r0);
          idx.push_back(c0 + static_cast<std::int64_t>(a));
          report.violations.push_back({"c-connecting", idx, lhs, rhs});
        }
      }
    });
  }
  if (wd >= 3) {
    const std::uint64_t cap = std::max<std::uint64_t>(1, options.tuple_cap / h);
    report.mixed_checked += h * for_each_subset(wd, 3, cap, rng, report.sampled,
                                                [&](const std::vector<std::size_t>& x) {
      for (std::size_t a = 0; a < h; ++a) {
        BigInt lhs = t(a, x[1]) * d(x[0], x[2]);
        BigInt rhs = t(a, x[0]) * d(x[1], x[2]) + t(a, x[2]) * d(x[0], x[1]);
        if (lhs != rhs) {
          auto idx = absolute(x, c0);
          idx.push_back(r0 + static_cast<std::int64_t>(a));
          report.violations.push_back({"d-connecting", idx, lhs, rhs});
        }
      }
    });
  }

  // Crossing connecting arcs: minor over rows i<j, columns p<q.
  {
    const std::uint64_t row_pairs = binomial(h, 2);
    const std::uint64_t cap = std::max<std::uint64_t>(1, options.tuple_cap / std::max<std::uint64_t>(1, row_pairs));
    std::vector<std::pair<std::size_t, std::size_t>> rows_list;
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = i + 1; j < h; ++j) rows_list.emplace_back(i, j);
    }
    std::uint64_t col_pairs = for_each_subset(wd, 2, cap, rng, report.sampled,
                                              [&](const std::vector<std::size_t>& pq) {
      for (const auto& [i, j] : rows_list) {
        BigInt lhs = t(i, pq[0]) * t(j, pq[1]) - t(i, pq[1]) * t(j, pq[0]);
        BigInt rhs = c(i, j) * d(pq[0], pq[1]);
        if (lhs != rhs) {
          report.violations.push_back({"minor-factorisation",
                                       {r0 + static_cast<std::int64_t>(i), r0 + static_cast<std::int64_t>(j),
                                        c0 + static_cast<std::int64_t>(pq[0]), c0 + static_cast<std::int64_t>(pq[1])},
                                       lhs, rhs});
        }
      }
    });
    report.connecting_checked += col_pairs * row_pairs;
  }
  return report;
}

std::vector<CellPair> ones_quadrant_check(const TilingWindow& w) {
  std::vector<Cell> ones;
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
    for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) {
      if (w.at(i, j) == 1) ones.push_back({i, j});
    }
  }
  std::vector<CellPair> violations;
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      const Cell& x = ones[a];
      const Cell& y = ones[b];
      if ((x.row < y.row && x.col < y.col) || (x.row > y.row && x.col > y.col)) violations.push_back({x, y});
    }
  }
  return violations;
}

std::vector<RepeatedValueViolation> repeated_value_check(const TilingWindow& w) {
  std::vector<RepeatedValueViolation> violations;
  auto scan = [&](std::int64_t line, bool by_row) {
    const IndexRange& along = by_row ? w.cols() : w.rows();
    auto cell = [&](std::int64_t l, std::int64_t k) { return by_row ? Cell{l, k} : Cell{k, l}; };
    auto value = [&](const Cell& x) -> const BigInt& { return w.at(x.row, x.col); };
    std::map<BigInt, std::vector<std::int64_t>> positions;
    for (std::int64_t k = along.first; k <= along.last; ++k) positions[value(cell(line, k))].push_back(k);
    const IndexRange& across = by_row ? w.rows() : w.cols();
    for (const auto& [v, ks] : positions) {
      for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t b = a + 1; b < ks.size(); ++b) {
          const Cell first = cell(line, ks[a]);
          const Cell second = cell(line, ks[b]);
          if (across.contains(line - 1)) {
            Cell n1 = cell(line - 1, ks[a]);
            Cell n2 = cell(line - 1, ks[b]);
            if (!(value(n1) > value(n2))) violations.push_back({first, second, n1, n2});
          }
          if (across.contains(line + 1)) {
            Cell n1 = cell(line + 1, ks[a]);
            Cell n2 = cell(line + 1, ks[b]);
            if (!(value(n1) < value(n2))) violations.push_back({first, second, n1, n2});
          }
        }
      }
    }
  };
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) scan(i, true);
  for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) scan(j, false);
  return violations;
}

Linearization linearization_coefficients(const TilingWindow& w) {
  if (w.height() < 3 && w.width() < 3) {
    throw InvalidWindowError("linearization needs at least three rows or three columns");
  }
  Linearization result;
  auto coefficient = [&](std::int64_t line, bool by_row) {
    const IndexRange& along = by_row ? w.cols() : w.rows();
    auto t = [&](std::int64_t l, std::int64_t k) -> const BigInt& { return by_row ? w.at(l, k) : w.at(k, l); };
    std::optional<BigInt> common;
    for (std::int64_t k = along.first; k <= along.last; ++k) {
      BigInt sum = t(line - 1, k) + t(line + 1, k);
      auto ratio = exact_quotient(sum, t(line, k));
      const std::string where = std::string(by_row ? "row " : "column ") + std::to_string(line);
      if (!ratio) {
        throw InvalidWindowError("neighbouring lines of " + where + " are not an integer multiple of it at " +
                                 std::to_string(k));
      }
      if (common && *common != *ratio) {
        throw InvalidWindowError("linear relation at " + where + " has coefficient " + to_string(*common) +
                                 " and " + to_string(*ratio));
      }
      common = std::move(*ratio);
    }
    // c (or d) needs two lines in the other direction
    if (by_row ? w.width() >= 2 : w.height() >= 2) {
      BigInt expected = by_row ? c_value(w, line - 1, line + 1).value : d_value(w, line - 1, line + 1).value;
      if (expected != *common) {
        throw InvalidWindowError(std::string(by_row ? "row " : "column ") + std::to_string(line) +
                                 " has coefficient " + to_string(*common) + " but the determinant gives " +
                                 to_string(expected));
      }
    }
    return std::move(*common);
  };
  for (std::int64_t i = w.rows().first + 1; i < w.rows().last; ++i) result.row_coefficients.push_back(coefficient(i, true));
  for (std::int64_t j = w.cols().first + 1; j < w.cols().last; ++j) result.column_coefficients.push_back(coefficient(j, false));
  return result;
}

FillError::FillError(Reason reason, Cell cell, const std::string& message)
    : std::runtime_error(message), reason_(reason), cell_(cell) {}

TilingWindow determinant_fill(const std::map<Cell, BigInt>& seeds, IndexRange rows, IndexRange cols) {
  if (rows.empty() || cols.empty()) throw std::invalid_argument("determinant_fill needs a non-empty window");
  IndexRange box_rows = rows;
  IndexRange box_cols = cols;
  for (const auto& [cell, value] : seeds) {
    if (value < 1) {
      throw FillError(FillError::Reason::BadSeed, cell,
                      "seed " + to_string(value) + " at " + to_string(cell) + " is not a positive integer");
    }
    box_rows.first = std::min(box_rows.first, cell.row);
    box_rows.last = std::max(box_rows.last, cell.row);
    box_cols.first = std::min(box_cols.first, cell.col);
    box_cols.last = std::max(box_cols.last, cell.col);
  }
  const std::int64_t height = box_rows.size();
  const std::int64_t width = box_cols.size();
  std::vector<BigInt> grid(static_cast<std::size_t>(height * width));
  std::vector<char> known(grid.size(), 0);
  std::vector<char> queued(grid.size(), 0);
  auto index = [&](std::int64_t i, std::int64_t j) {
    return static_cast<std::size_t>((i - box_rows.first) * width + (j - box_cols.first));
  };
  auto inside = [&](std::int64_t i, std::int64_t j) { return box_rows.contains(i) && box_cols.contains(j); };
  auto is_known = [&](std::int64_t i, std::int64_t j) { return inside(i, j) && known[index(i, j)]; };
  auto get = [&](std::int64_t i, std::int64_t j) -> const BigInt& { return grid[index(i, j)]; };

  for (const auto& [cell, value] : seeds) {
    grid[index(cell.row, cell.col)] = value;
    known[index(cell.row, cell.col)] = 1;
  }

  std::deque<Cell> queue;
  auto enqueue_neighbours = [&](std::int64_t i, std::int64_t j) {
    for (std::int64_t di = -1; di <= 1; ++di) {
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        const std::int64_t a = i + di;
        const std::int64_t b = j + dj;
        if (!inside(a, b) || known[index(a, b)] || queued[index(a, b)]) continue;
        queued[index(a, b)] = 1;
        queue.push_back({a, b});
      }
    }
  };
  for (const auto& [cell, value] : seeds) enqueue_neighbours(cell.row, cell.col);

  while (!queue.empty()) {
    const Cell cell = queue.front();
    queue.pop_front();
    const std::int64_t i = cell.row;
    const std::int64_t j = cell.col;
    queued[index(i, j)] = 0;
    if (known[index(i, j)]) continue;

    // Try the four blocks containing the cell; (top, left) is the block's
    // upper-left corner and (di, dj) the cell's offset inside it.
    std::optional<BigInt> numerator;
    const BigInt* divisor = nullptr;
    for (int corner = 0; corner < 4 && !numerator; ++corner) {
      const std::int64_t di = corner / 2;
      const std::int64_t dj = corner % 2;
      const std::int64_t top = i - di;
      const std::int64_t left = j - dj;
      bool others = true;
      for (int k = 0; k < 4; ++k) {
        if (k == corner) continue;
        if (!is_known(top + k / 2, left + k % 2)) others = false;
      }
      if (!others) continue;
      const BigInt* a = corner == 0 ? nullptr : &get(top, left);
      const BigInt* b = corner == 1 ? nullptr : &get(top, left + 1);
      const BigInt* c = corner == 2 ? nullptr : &get(top + 1, left);
      const BigInt* d = corner == 3 ? nullptr : &get(top + 1, left + 1);
      switch (corner) {
        case 0: numerator = *b * *c + 1; divisor = d; break;  // a d - b c = 1
        case 1: numerator = *a * *d - 1; divisor = c; break;
        case 2: numerator = *a * *d - 1; divisor = b; break;
        default: numerator = *b * *c + 1; divisor = a; break;
      }
    }
    if (!numerator) continue;  // re-queued once a neighbour becomes known
    auto value = exact_quotient(*numerator, *divisor);
    if (!value) {
      throw FillError(FillError::Reason::InexactDivision, cell,
                      "determinant fill: " + to_string(*numerator) + " is not divisible by " + to_string(*divisor) +
                          " at " + to_string(cell));
    }
    if (*value < 1) {
      throw FillError(FillError::Reason::NonPositive, cell,
                      "determinant fill: entry " + to_string(*value) + " at " + to_string(cell) +
                          " is not a positive integer");
    }
    grid[index(i, j)] = std::move(*value);
    known[index(i, j)] = 1;
    enqueue_neighbours(i, j);
  }

  for (std::int64_t i = rows.first; i <= rows.last; ++i) {
    for (std::int64_t j = cols.first; j <= cols.last; ++j) {
      if (!known[index(i, j)]) {
        throw FillError(FillError::Reason::Unsolvable, {i, j},
                        "determinant fill: no block determines " + to_string(Cell{i, j}) +
                            "; the seeds do not admit a fill order");
      }
    }
  }
  for (std::int64_t i = box_rows.first; i < box_rows.last; ++i) {
    for (std::int64_t j = box_cols.first; j < box_cols.last; ++j) {
      if (!(known[index(i, j)] && known[index(i, j + 1)] && known[index(i + 1, j)] && known[index(i + 1, j + 1)])) {
        continue;
      }
      BigInt det = get(i, j) * get(i + 1, j + 1) - get(i, j + 1) * get(i + 1, j);
      if (det != 1) {
        throw FillError(FillError::Reason::Inconsistent, {i, j},
                        "determinant fill: seeds are inconsistent, block at " + to_string(Cell{i, j}) +
                            " has determinant " + to_string(det));
      }
    }
  }

  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(rows.size() * cols.size()));
  for (std::int64_t i = rows.first; i <= rows.last; ++i) {
    for (std::int64_t j = cols.first; j <= cols.last; ++j) values.push_back(std::move(grid[index(i, j)]));
  }
  return TilingWindow(rows, cols, std::move(values));
}

}  // namespace sl2
