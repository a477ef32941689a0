#include "sl2tiling/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "sl2tiling/cli_io.hpp"
#include "sl2tiling/fixtures.hpp"
#include "sl2tiling/phi_map.hpp"
#include "sl2tiling/psi_map.hpp"

namespace sl2 {

namespace {

// Thrown for unreadable files; mapped to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

IndexRange to_range(const std::vector<std::int64_t>& bounds, const char* name) {
  IndexRange range{bounds.at(0), bounds.at(1)};
  if (range.empty()) throw InputError(std::string("--") + name + " end is below its start");
  return range;
}

WindowStyle to_style(const std::string& name) { return name == "ascii" ? WindowStyle::Ascii : WindowStyle::Tsv; }

constexpr std::size_t kListLimit = 10;

// Prints one report section; returns whether it was clean.
template <typename Items, typename Describe>
bool section(std::ostream& out, const std::string& name, const Items& items, bool list_all, const std::string& detail,
             Describe&& describe) {
  if (items.empty()) {
    out << name << ": ok" << (detail.empty() ? "" : " (" + detail + ")") << '\n';
    return true;
  }
  out << name << ": " << items.size() << " violation" << (items.size() == 1 ? "" : "s") << '\n';
  std::size_t shown = 0;
  for (const auto& item : items) {
    if (!list_all && shown == kListLimit) {
      out << "  ... " << items.size() - shown << " more (use --all)\n";
      break;
    }
    out << "  " << describe(item) << '\n';
    ++shown;
  }
  return false;
}

bool check_window(const TilingWindow& w, bool all, std::ostream& out) {
  bool clean = true;
  clean &= section(out, "determinants", check_determinants(w), all,
                   std::to_string(std::max<std::int64_t>(0, (w.height() - 1) * (w.width() - 1))) + " blocks",
                   [](const DeterminantViolation& v) {
                     return "block at " + to_string(v.top_left) + " has determinant " + to_string(v.determinant);
                   });
  clean &= section(out, "ones-quadrant", ones_quadrant_check(w), all, "", [](const CellPair& p) {
    return "ones at " + to_string(p.first) + " and " + to_string(p.second);
  });
  clean &= section(out, "repeated-values", repeated_value_check(w), all, "", [](const RepeatedValueViolation& v) {
    return "equal entries at " + to_string(v.first) + " and " + to_string(v.second) + ", misordered neighbours " +
           to_string(v.first_neighbour) + " and " + to_string(v.second_neighbour);
  });

  if (w.height() < 2 || w.width() < 2) {
    out << "ptolemy: skipped (window smaller than 2x2)\n";
  } else {
    try {
      PtolemyOptions options;
      if (all) options.tuple_cap = std::numeric_limits<std::uint64_t>::max();
      const PtolemyReport report = ptolemy_report(w, options);
      const std::string detail = std::to_string(report.internal_checked) + " crossing, " +
                                 std::to_string(report.mixed_checked) + " mixed, " +
                                 std::to_string(report.connecting_checked) + " factorisation, " +
                                 std::to_string(report.positivity_checked) + " positivity" +
                                 (report.sampled ? ", sampled" : "");
      clean &= section(out, "ptolemy", report.violations, all, detail, [](const PtolemyViolation& v) {
        std::string indices;
        for (auto k : v.indices) indices += (indices.empty() ? "" : ",") + std::to_string(k);
        return v.identity + " at (" + indices + "): " + to_string(v.lhs) + " != " + to_string(v.rhs);
      });
    } catch (const InvalidWindowError& e) {
      out << "ptolemy: 1 violation\n  " << e.what() << '\n';
      clean = false;
    }
  }

  if (w.height() < 3 && w.width() < 3) {
    out << "linearization: skipped (window smaller than 3 in both directions)\n";
  } else {
    try {
      const Linearization lin = linearization_coefficients(w);
      auto join = [](const std::vector<BigInt>& values) {
        std::string text;
        for (const auto& v : values) text += (text.empty() ? "" : " ") + to_string(v);
        return text.empty() ? std::string("-") : text;
      };
      out << "linearization: ok (rows " << join(lin.row_coefficients) << "; columns "
          << join(lin.column_coefficients) << ")\n";
    } catch (const InvalidWindowError& e) {
      out << "linearization: 1 violation\n  " << e.what() << '\n';
      clean = false;
    }
  }
  return clean;
}

void print_frieze(const FriezeGrid& grid, std::ostream& out) {
  const auto n = static_cast<std::int64_t>(grid.width());
  out << "# frieze of a " << grid.polygon_size() << "-gon, columns " << grid.first_col() << ".." << grid.last_col()
      << "; line d lists F(c-d, c)\n";
  for (std::int64_t d = 1; d <= n; ++d) {
    out << "d" << d << ':';
    for (std::int64_t c = grid.first_col(); c <= grid.last_col(); ++c) {
      if (const BigInt* v = grid.find(c - d, c)) out << '\t' << to_string(*v);
    }
    out << '\n';
  }
}

void print_triangulation(const PolygonTriangulation& pt, std::ostream& out) {
  out << "polygon " << pt.vertex_count() << '\n';
  for (const Diagonal& d : pt.diagonals()) out << "diagonal " << d.a << ' ' << d.b << '\n';
  const Quiddity q = quiddity_of(pt);
  out << "# quiddity";
  for (auto c : q.counts()) out << ' ' << c;
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SL2-tilings from strip triangulations and back"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string spec_path = "-";
  std::string window_path = "-";
  std::string seed_path = "-";
  std::string polygon_path;
  std::string column_text;
  std::string style = "tsv";
  std::string demo_name;
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;
  bool verify = false;
  bool all = false;

  auto add_window_options = [&](CLI::App* cmd) {
    cmd->add_option("--rows", rows, "first and last row")->expected(2)->required();
    cmd->add_option("--cols", cols, "first and last column")->expected(2)->required();
  };
  auto add_style = [&](CLI::App* cmd) {
    cmd->add_option("--style", style, "window output style")->check(CLI::IsMember({"tsv", "ascii"}));
  };

  auto* tile = app.add_subcommand("tile", "window of the tiling of a spec");
  tile->add_option("--spec", spec_path, "spec file ('-' for stdin)")->required();
  add_window_options(tile);
  add_style(tile);
  tile->add_flag("--verify", verify, "recompute every entry from its polygon");

  auto* extract = app.add_subcommand("extract", "recover the triangulation patch of a window");
  extract->add_option("--window", window_path, "window file ('-' for stdin)");

  auto* check = app.add_subcommand("check", "run every tiling identity on a window");
  check->add_option("--window", window_path, "window file ('-' for stdin)");
  check->add_flag("--all", all, "check every tuple and list every violation");

  auto* fill = app.add_subcommand("fill", "complete a window from seed entries");
  fill->add_option("--seed", seed_path, "seed file ('-' for stdin)")->required();
  add_window_options(fill);
  add_style(fill);

  auto* frieze = app.add_subcommand("frieze", "frieze of an edge column or a triangulated polygon");
  auto* column_opt = frieze->add_option("--column", column_text, "edge-to-edge column, e.g. \"1 3 2 1\"");
  auto* polygon_opt = frieze->add_option("--polygon", polygon_path, "polygon file ('-' for stdin)");
  column_opt->excludes(polygon_opt);
  frieze->require_option(1);

  auto* roundtrip = app.add_subcommand("roundtrip", "generate, recover and regenerate a window");
  roundtrip->add_option("--spec", spec_path, "spec file ('-' for stdin)")->required();
  add_window_options(roundtrip);

  auto* demo = app.add_subcommand("demo", "print a bundled data set");
  demo->add_option("name", demo_name, "data set")
      ->required()
      ->check(CLI::IsMember({"figure1", "figure2", "figure4", "staircase"}));
  add_style(demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kClean : kInputError;
  }

  try {
    if (tile->parsed()) {
      const auto spec = parse_spec(read_source(spec_path, in));
      out << emit_window(phi_window(spec, to_range(rows, "rows"), to_range(cols, "cols"), verify), to_style(style));
      return kClean;
    }
    if (extract->parsed()) {
      const TilingWindow w = parse_window(read_source(window_path, in));
      out << emit_patch(psi_window(w));
      return kClean;
    }
    if (check->parsed()) {
      const TilingWindow w = parse_window(read_source(window_path, in));
      return check_window(w, all, out) ? kClean : kCheckFailed;
    }
    if (fill->parsed()) {
      const auto seeds = parse_seeds(read_source(seed_path, in));
      out << emit_window(determinant_fill(seeds, to_range(rows, "rows"), to_range(cols, "cols")), to_style(style));
      return kClean;
    }
    if (frieze->parsed()) {
      if (!column_text.empty()) {
        std::vector<BigInt> column;
        std::istringstream tokens(column_text);
        for (std::string token; tokens >> token;) {
          auto value = parse_bigint(token);
          if (!value) throw InputError("'" + token + "' in --column is not an integer");
          column.push_back(std::move(*value));
        }
        const FriezeGrid grid = frieze_from_boundary_column(column);
        print_frieze(grid, out);
        print_triangulation(triangulation_from_ones(grid), out);
      } else {
        const PolygonTriangulation pt = parse_polygon(read_source(polygon_path, in));
        print_frieze(frieze_of(pt), out);
        print_triangulation(pt, out);
      }
      return kClean;
    }
    if (roundtrip->parsed()) {
      const auto spec = parse_spec(read_source(spec_path, in));
      const RoundtripReport report = roundtrip_check(spec, to_range(rows, "rows"), to_range(cols, "cols"));
      out << "arcs compared: " << report.arcs_compared << "\ncells compared: " << report.cells_compared << '\n';
      for (const auto& line : report.mismatches) out << "mismatch: " << line << '\n';
      out << (report.ok() ? "roundtrip: ok\n" : "roundtrip: FAILED\n");
      return report.ok() ? kClean : kCheckFailed;
    }
    if (demo->parsed()) {
      if (demo_name == "figure2") {
        out << emit_window(fixtures::enough_ones_window(), to_style(style));
      } else if (demo_name == "figure4") {
        out << emit_window(fixtures::sparse_ones_window(), to_style(style));
      } else if (demo_name == "staircase") {
        out << emit_spec(fixtures::staircase_spec());
      } else {
        out << "# derived, not transcribed: the patch recovered from 'demo figure2'\n"
            << emit_patch(psi_window(fixtures::enough_ones_window()));
      }
      return kClean;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SpecError& e) {
    err << "error: invalid spec\n";
    for (const SpecIssue& issue : e.report()) err << "  " << to_string(issue.kind) << ": " << issue.message << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    // Frieze, fill and zig-zag failures: the data is not what it claims.
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace sl2
