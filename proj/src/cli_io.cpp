#include "sl2tiling/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace sl2 {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      const std::size_t begin = k;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      if (k > begin) line.tokens.push_back({raw.substr(begin, k - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::int64_t integer(const Line& line, std::size_t k) {
  const Token& t = line.tokens[k];
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line.number, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const std::size_t column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
    throw ParseError(line.number, column,
                     "'" + std::string(line.tokens[0].text) + "' takes " + std::to_string(count - 1) +
                         " arguments, found " + std::to_string(line.tokens.size() - 1));
  }
}

IndexRange range_line(const Line& line, std::string_view keyword) {
  if (line.tokens[0].text != keyword) {
    throw ParseError(line.number, line.tokens[0].column,
                     "expected '" + std::string(keyword) + "', found '" + std::string(line.tokens[0].text) + "'");
  }
  expect_arity(line, 3);
  IndexRange range{integer(line, 1), integer(line, 2)};
  if (range.empty()) throw ParseError(line.number, line.tokens[2].column, "range end is below its start");
  return range;
}

}  // namespace

PeriodicTriangulationSpec parse_spec_document(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty spec: expected 'period P dx dy'");
  const Line& header = lines.front();
  if (header.tokens[0].text != "period") {
    throw ParseError(header.number, header.tokens[0].column, "the first line must be 'period P dx dy'");
  }
  expect_arity(header, 4);
  const std::int64_t period = integer(header, 1);
  if (period < 1) throw ParseError(header.number, header.tokens[1].column, "period must be at least 1");
  PeriodicTriangulationSpec spec;
  spec.shift = {integer(header, 2), integer(header, 3)};
  spec.internal.resize(static_cast<std::size_t>(period));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string_view keyword = line.tokens[0].text;
    if (keyword == "conn") {
      expect_arity(line, 3);
      if (static_cast<std::int64_t>(spec.connecting.size()) == period) {
        throw ParseError(line.number, line.tokens[0].column, "more than " + std::to_string(period) + " 'conn' lines");
      }
      spec.connecting.push_back(Arc::connecting(integer(line, 1), integer(line, 2)));
    } else if (keyword == "internal") {
      expect_arity(line, 5);
      const std::int64_t alpha = integer(line, 1);
      if (alpha < 0 || alpha >= period) {
        throw ParseError(line.number, line.tokens[1].column, "alpha must lie in 0.." + std::to_string(period - 1));
      }
      const std::string_view kind = line.tokens[2].text;
      const std::int64_t p = integer(line, 3);
      const std::int64_t q = integer(line, 4);
      if (kind != "upper" && kind != "lower") {
        throw ParseError(line.number, line.tokens[2].column, "arc kind must be 'upper' or 'lower'");
      }
      if (p > q - 2) throw ParseError(line.number, line.tokens[3].column, "internal arcs need p <= q - 2");
      spec.internal[static_cast<std::size_t>(alpha)].push_back(kind == "upper" ? Arc::upper(p, q) : Arc::lower(p, q));
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (static_cast<std::int64_t>(spec.connecting.size()) != period) {
    throw ParseError(lines.back().number, 1,
                     "expected " + std::to_string(period) + " 'conn' lines, found " +
                         std::to_string(spec.connecting.size()));
  }
  return spec;
}

PeriodicTriangulationSpec parse_spec(std::string_view text) {
  PeriodicTriangulationSpec spec = parse_spec_document(text);
  require_valid(spec);
  return spec;
}

std::string emit_spec(const PeriodicTriangulationSpec& spec) {
  std::ostringstream out;
  out << "period " << spec.period() << ' ' << spec.shift.dx << ' ' << spec.shift.dy << '\n';
  for (const Arc& arc : spec.connecting) out << "conn " << arc.first() << ' ' << arc.second() << '\n';
  for (std::size_t alpha = 0; alpha < spec.internal.size(); ++alpha) {
    for (const Arc& arc : spec.internal[alpha]) {
      out << "internal " << alpha << ' ' << (arc.kind() == ArcKind::UpperInternal ? "upper" : "lower") << ' '
          << arc.first() << ' ' << arc.second() << '\n';
    }
  }
  return out.str();
}

TilingWindow parse_window(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() < 2) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "expected 'rows' and 'cols' headers");
  const IndexRange rows = range_line(lines[0], "rows");
  const IndexRange cols = range_line(lines[1], "cols");
  if (static_cast<std::int64_t>(lines.size()) - 2 != rows.size()) {
    throw ParseError(lines.back().number, 1,
                     "expected " + std::to_string(rows.size()) + " rows of entries, found " +
                         std::to_string(lines.size() - 2));
  }
  std::vector<BigInt> values;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (static_cast<std::int64_t>(line.tokens.size()) != cols.size()) {
      throw ParseError(line.number, line.tokens.back().column,
                       "expected " + std::to_string(cols.size()) + " entries, found " +
                           std::to_string(line.tokens.size()));
    }
    for (const Token& t : line.tokens) {
      auto value = parse_bigint(t.text);
      if (!value) throw ParseError(line.number, t.column, "'" + std::string(t.text) + "' is not an integer");
      if (*value < 1) throw ParseError(line.number, t.column, "entries must be positive, found " + std::string(t.text));
      values.push_back(std::move(*value));
    }
  }
  return TilingWindow(rows, cols, std::move(values));
}

std::string emit_window(const TilingWindow& w, WindowStyle style) {
  std::ostringstream out;
  if (style == WindowStyle::Tsv) {
    out << "rows " << w.rows().first << ' ' << w.rows().last << '\n';
    out << "cols " << w.cols().first << ' ' << w.cols().last << '\n';
    for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
      for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) {
        if (j != w.cols().first) out << '\t';
        out << to_string(w.at(i, j));
      }
      out << '\n';
    }
    return out.str();
  }
  std::size_t cell = 1;
  for (const BigInt& v : w.values()) cell = std::max(cell, to_string(v).size());
  for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) cell = std::max(cell, std::to_string(j).size());
  std::size_t label = 1;
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) label = std::max(label, std::to_string(i).size());
  auto pad = [](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
  out << std::string(label, ' ') << " |";
  for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) out << ' ' << pad(std::to_string(j), cell);
  out << '\n' << std::string(label + 1, '-') << '+' << std::string(static_cast<std::size_t>(w.width()) * (cell + 1), '-')
      << '\n';
  for (std::int64_t i = w.rows().first; i <= w.rows().last; ++i) {
    out << pad(std::to_string(i), label) << " |";
    for (std::int64_t j = w.cols().first; j <= w.cols().last; ++j) out << ' ' << pad(to_string(w.at(i, j)), cell);
    out << '\n';
  }
  return out.str();
}

std::map<Cell, BigInt> parse_seeds(std::string_view text) {
  std::map<Cell, BigInt> seeds;
  for (const Line& line : tokenize(text)) {
    expect_arity(line, 3);
    const Cell cell{integer(line, 0), integer(line, 1)};
    auto value = parse_bigint(line.tokens[2].text);
    if (!value) throw ParseError(line.number, line.tokens[2].column, "seed value is not an integer");
    if (!seeds.emplace(cell, std::move(*value)).second) {
      throw ParseError(line.number, line.tokens[0].column, "cell " + to_string(cell) + " is seeded twice");
    }
  }
  if (seeds.empty()) throw ParseError(1, 1, "no seeds given");
  return seeds;
}

std::string emit_seeds(const std::map<Cell, BigInt>& seeds) {
  std::ostringstream out;
  for (const auto& [cell, value] : seeds) out << cell.row << ' ' << cell.col << ' ' << to_string(value) << '\n';
  return out.str();
}

PolygonTriangulation parse_polygon(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0].text != "polygon") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1, "the first line must be 'polygon N'");
  }
  expect_arity(lines[0], 2);
  const std::int64_t count = integer(lines[0], 1);
  if (count < 3) throw ParseError(lines[0].number, lines[0].tokens[1].column, "a polygon needs at least 3 vertices");
  std::vector<Diagonal> diagonals;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "diagonal") {
      throw ParseError(line.number, line.tokens[0].column, "expected 'diagonal a b'");
    }
    expect_arity(line, 3);
    const std::int64_t a = integer(line, 1);
    const std::int64_t b = integer(line, 2);
    if (a < 0 || b < 0 || a >= count || b >= count) {
      throw ParseError(line.number, line.tokens[1].column, "vertex labels must lie in 0.." + std::to_string(count - 1));
    }
    diagonals.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  return PolygonTriangulation(static_cast<std::size_t>(count), std::move(diagonals));
}

std::string emit_patch(const FinitePatch& patch) {
  std::ostringstream out;
  out << "# " << patch.connecting.size() << " connecting arcs, " << patch.internal.size() << " internal arcs\n";
  out << "leading " << (patch.leading_complete ? "complete" : "incomplete") << '\n';
  out << "trailing " << (patch.trailing_complete ? "complete" : "incomplete") << '\n';
  for (const Arc& arc : patch.connecting) out << "conn " << arc.first() << ' ' << arc.second() << '\n';
  const StripSegment segment = segment_of(patch);
  for (std::size_t k = 0; k < segment.polygons.size(); ++k) {
    for (const Arc& arc : segment.polygons[k].internal_arcs()) {
      out << "internal " << k << ' ' << (arc.kind() == ArcKind::UpperInternal ? "upper" : "lower") << ' '
          << arc.first() << ' ' << arc.second() << '\n';
    }
  }
  return out.str();
}

}  // namespace sl2
