// Command-line front end: exact tiling counts, exhaustive enumeration with
// ASCII rendering, reference-table emission and verification, cross-engine
// agreement checks, and OEIS-style sequence export.
//
// Exit codes: 0 success, 1 verification or crosscheck mismatch, 2 usage or
// budget errors. Data goes to stdout (or --out FILE); diagnostics,
// including the chosen engine, go to stderr.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tilecount/closed_form.hpp"
#include "tilecount/enumerate.hpp"
#include "tilecount/errors.hpp"
#include "tilecount/families.hpp"
#include "tilecount/tables.hpp"

namespace {

using namespace tilecount;

constexpr long long kDefaultBudgetCells = 64;

// Buffers the payload so --out can atomically redirect it to a file.
class Sink {
 public:
  explicit Sink(std::string path) : path_(std::move(path)) {}

  template <typename T>
  Sink& operator<<(const T& v) {
    buf_ << v;
    return *this;
  }

  int flush() {
    if (path_.empty()) {
      std::cout << buf_.str();
      return 0;
    }
    std::ofstream out(path_, std::ios::binary);
    out << buf_.str();
    if (!out) {
      std::cerr << "error: cannot write " << path_ << "\n";
      return 2;
    }
    return 0;
  }

 private:
  std::string path_;
  std::ostringstream buf_;
};

struct CountArgs {
  int rows = 0;
  int cols = 0;
  int tile = 0;
  bool tatami = false;
  std::string method = "auto";
  bool force = false;
  std::string out;
};

struct EnumerateArgs {
  int rows = 0;
  int cols = 0;
  int tile = 0;
  bool tatami = false;
  long long limit = -1;
  bool render = false;
  bool force = false;
  std::string out;
};

struct TableArgs {
  std::string name;
  std::string format = "csv";
  bool verify = false;
  std::string out;
};

struct CrosscheckArgs {
  long long max_cells = 28;
  std::string families;
  std::string out;
};

struct SequenceArgs {
  std::string family;
  int param = 0;
  long long upto = -1;
  long long upto_p = -1;
  std::string format = "bfile";
  std::string out;
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

// Counts on a transposed board are identical; the profile DP is cheapest
// with the short side as rows.
BigCount profile_dp_short_side(const BoardSpec& board, int tile_len) {
  BoardSpec b = board;
  if (b.cols > 0 && b.cols < b.rows) b = {b.cols, b.rows};
  return count_profile_dp(b, tile_len);
}

int run_count(const CountArgs& args) {
  if (args.rows < 1 || args.cols < 0 || args.tile < 1) {
    return usage_error("need --rows >= 1, --cols >= 0, --tile >= 1");
  }
  const BoardSpec board{args.rows, args.cols};
  const auto family = infer_family(args.rows, args.tile, args.tatami);

  std::string method = args.method;
  if (method == "auto") {
    method = family ? "recurrence" : "backtracking";
  }

  Sink sink(args.out);
  if (method == "recurrence") {
    if (!family) {
      return usage_error(
          "no counting family covers this shape; use --method backtracking");
    }
    std::cerr << "engine: recurrence (" << family_name(*family) << ")\n";
    sink << count_family(*family, args.cols) << "\n";
  } else if (method == "backtracking") {
    std::cerr << "engine: backtracking\n";
    EnumerationConfig config;
    config.tile_len = args.tile;
    config.tatami_filter = args.tatami;
    sink << count_exhaustive(board, config,
                             args.force ? -1 : kDefaultBudgetCells)
         << "\n";
  } else if (method == "profile-dp") {
    if (args.tatami) {
      return usage_error("profile-dp cannot filter tatami tilings");
    }
    std::cerr << "engine: profile-dp\n";
    sink << profile_dp_short_side(board, args.tile) << "\n";
  } else if (method == "closed-form") {
    if (args.tatami || args.tile != 2 || args.cols < 1 || args.rows < 2 ||
        args.rows > 4) {
      return usage_error(
          "closed-form covers 2xm, 3xm and 4xm domino boards with m >= 1");
    }
    std::cerr << "engine: closed-form\n";
    const double value = args.rows == 2   ? closed_form_2xm(args.cols)
                         : args.rows == 3 ? closed_form_3xm(args.cols)
                                          : closed_form_4xm(args.cols);
    sink << std::llround(value) << "\n";
  } else if (method == "kasteleyn") {
    if (args.tatami || args.tile != 2 || args.cols < 1) {
      return usage_error("kasteleyn covers domino boards with m, n >= 1");
    }
    std::cerr << "engine: kasteleyn\n";
    sink << std::llround(kasteleyn_count(args.rows, args.cols)) << "\n";
  } else {
    return usage_error("unknown method: " + args.method);
  }
  return sink.flush();
}

int run_enumerate(const EnumerateArgs& args) {
  if (args.rows < 1 || args.cols < 0 || args.tile < 1) {
    return usage_error("need --rows >= 1, --cols >= 0, --tile >= 1");
  }
  const BoardSpec board{args.rows, args.cols};
  if (!args.force && board.cell_count() > kDefaultBudgetCells) {
    std::cerr << "error: board has " << board.cell_count()
              << " cells, above the enumeration budget of "
              << kDefaultBudgetCells << "; pass --force to run anyway\n";
    return 2;
  }
  EnumerationConfig config;
  config.tile_len = args.tile;
  config.tatami_filter = args.tatami;
  if (args.limit >= 0) config.limit = args.limit;

  std::ostringstream renders;
  const long long count = enumerate_tilings(board, config, [&](const Tiling& t) {
    if (args.render) renders << "\n" << render_ascii(t);
    return true;
  });
  Sink sink(args.out);
  sink << count << "\n" << renders.str();
  return sink.flush();
}

int run_table(const TableArgs& args) {
  const auto name = table_from_name(args.name);
  if (!name) return usage_error("unknown table: " + args.name);
  const auto format = format_from_name(args.format);
  if (!format) return usage_error("unknown format: " + args.format);

  Sink sink(args.out);
  if (args.verify) {
    const VerifyReport report = verify_table(*name);
    if (report.pass) {
      sink << "table " << args.name << ": " << report.cells_checked
           << " cells verified, all match\n";
      return sink.flush();
    }
    sink << "table " << args.name << ": " << report.mismatches.size() << " of "
         << report.cells_checked << " cells mismatch\n";
    const auto& expected = expected_table(*name);
    for (const CellMismatch& m : report.mismatches) {
      sink << "  (" << expected.row_param << "=" << m.row << ", "
           << expected.col_param << "=" << m.col << "): expected " << m.expected
           << ", computed " << m.computed << "\n";
    }
    const int rc = sink.flush();
    return rc == 0 ? 1 : rc;
  }
  sink << emit(build_table(*name), *format);
  return sink.flush();
}

std::vector<FamilySpec> default_crosscheck_families() {
  std::vector<FamilySpec> out = {
      {FamilyKind::Domino2xM, 0},  {FamilyKind::Domino3xM, 0},
      {FamilyKind::Domino4xM, 0},  {FamilyKind::Tromino4xM, 0},
      {FamilyKind::Tatami2xM, 0},  {FamilyKind::Tatami3xM, 0},
      {FamilyKind::Tatami4xM, 0},
  };
  for (int m = 2; m <= 10; ++m) out.push_back(square_tile(m));
  for (int k = 2; k <= 6; ++k) out.push_back(kplus1(k));
  return out;
}

int run_crosscheck(const CrosscheckArgs& args) {
  if (args.max_cells < 1) return usage_error("--max-cells must be >= 1");

  std::vector<FamilySpec> families;
  if (args.families.empty()) {
    families = default_crosscheck_families();
  } else {
    std::istringstream is(args.families);
    std::string item;
    while (std::getline(is, item, ',')) {
      const auto f = family_from_name(item);
      if (!f) return usage_error("unknown family: " + item);
      families.push_back(*f);
    }
  }

  Sink sink(args.out);
  bool all_ok = true;
  sink << "family            widths  recurrence==backtracking  ==profile-dp\n";
  for (const FamilySpec& f : families) {
    const int rows = family_rows(f);
    const int tile = family_tile_len(f);
    const bool tatami = family_tatami(f);
    EnumerationConfig config;
    config.tile_len = tile;
    config.tatami_filter = tatami;

    const long long max_width = args.max_cells / rows;
    bool bt_ok = true;
    bool dp_ok = true;
    bool dp_ran = false;
    for (long long m = 0; m <= max_width; ++m) {
      const BoardSpec board{rows, static_cast<int>(m)};
      const BigCount want = count_family(f, m);
      const BigCount got_bt = count_exhaustive(board, config, -1);
      if (got_bt != want) {
        bt_ok = false;
        sink << "  MISMATCH " << family_name(f) << " width " << m
             << ": recurrence " << want << ", backtracking " << got_bt << "\n";
      }
      if (!tatami) {
        try {
          const BigCount got_dp = profile_dp_short_side(board, tile);
          dp_ran = true;
          if (got_dp != want) {
            dp_ok = false;
            sink << "  MISMATCH " << family_name(f) << " width " << m
                 << ": recurrence " << want << ", profile-dp " << got_dp << "\n";
          }
        } catch (const StateSpaceTooLarge&) {
        }
      }
    }
    all_ok = all_ok && bt_ok && dp_ok;

    std::ostringstream label;
    label << family_name(f);
    std::string pad = label.str();
    pad.resize(18, ' ');
    sink << pad << "0.." << max_width << "     "
         << (bt_ok ? "ok" : "FAIL") << "                        "
         << (tatami ? "n/a" : dp_ran ? (dp_ok ? "ok" : "FAIL") : "skipped")
         << "\n";
  }

  // Closed forms round to the exact counts up to their width cliffs.
  bool closed_ok = true;
  for (long long m = 1; m <= 30; ++m) {
    if (std::llround(closed_form_2xm(m)) !=
        count_family({FamilyKind::Domino2xM, 0}, m)) {
      closed_ok = false;
      sink << "  MISMATCH closed-form 2xm at width " << m << "\n";
    }
    if (m % 2 == 0 && std::llround(closed_form_3xm(m)) !=
                          count_family({FamilyKind::Domino3xM, 0}, m)) {
      closed_ok = false;
      sink << "  MISMATCH closed-form 3xm at width " << m << "\n";
    }
    if (m <= 25 && std::llround(closed_form_4xm(m)) !=
                       count_family({FamilyKind::Domino4xM, 0}, m)) {
      closed_ok = false;
      sink << "  MISMATCH closed-form 4xm at width " << m << "\n";
    }
  }
  sink << "closed-form rounding (2xm m<=30, 3xm even m<=30, 4xm m<=25): "
       << (closed_ok ? "ok" : "FAIL") << "\n";

  bool kast_ok = true;
  for (int m = 2; m <= 4; ++m) {
    const FamilyKind kind = m == 2   ? FamilyKind::Domino2xM
                            : m == 3 ? FamilyKind::Domino3xM
                                     : FamilyKind::Domino4xM;
    for (int n = 1; n <= 15; ++n) {
      const BigCount exact = count_family({kind, 0}, n);
      const double approx = kasteleyn_count(m, n);
      const double rel = std::fabs(approx - exact.convert_to<double>()) /
                         std::max(exact.convert_to<double>(), 1.0);
      if (rel >= 1e-9 || BigCount(std::llround(approx)) != exact) {
        kast_ok = false;
        sink << "  MISMATCH kasteleyn " << m << "x" << n << "\n";
      }
    }
  }
  sink << "kasteleyn vs exact (m=2..4, n<=15): " << (kast_ok ? "ok" : "FAIL")
       << "\n";

  all_ok = all_ok && closed_ok && kast_ok;
  sink << (all_ok ? "RESULT: all engines agree\n" : "RESULT: disagreement found\n");
  const int rc = sink.flush();
  if (rc != 0) return rc;
  return all_ok ? 0 : 1;
}

int run_sequence(const SequenceArgs& args) {
  std::optional<int> param;
  if (args.param != 0) param = args.param;
  const auto family = family_from_name(args.family, param);
  if (!family) {
    return usage_error("unknown family: " + args.family +
                       " (square-tile and kplus1 need --k)");
  }
  long long upto = args.upto;
  if (args.upto_p >= 0) {
    if (upto >= 0) return usage_error("--upto and --upto-p are exclusive");
    if (family->kind != FamilyKind::KPlus1) {
      return usage_error("--upto-p applies to the kplus1 family only");
    }
    upto = args.upto_p * family->param;
  }
  if (upto < 0) return usage_error("need --upto M (M >= 0)");
  if (args.format != "bfile" && args.format != "csv") {
    return usage_error("unknown format: " + args.format);
  }

  const auto values = sequence(*family, upto);
  Sink sink(args.out);
  if (args.format == "csv") sink << "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (args.format == "csv") {
      sink << i << ',' << values[i] << "\n";
    } else {
      sink << i << ' ' << values[i] << "\n";
    }
  }
  return sink.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tilecount: exact tiling counts for rectangular boards with 1xk tiles"};
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "Count tilings of a rows x cols board by 1xK tiles");
  count->add_option("--rows", count_args.rows, "Board rows (>= 1)")->required();
  count->add_option("--cols", count_args.cols, "Board cols (>= 0)")->required();
  count->add_option("--tile", count_args.tile, "Tile length K (>= 1)")->required();
  count->add_flag("--tatami", count_args.tatami,
                  "Only tilings where no four tiles meet at a vertex");
  count->add_option("--method", count_args.method,
                    "auto|recurrence|backtracking|profile-dp|closed-form|"
                    "kasteleyn (closed-form and kasteleyn print the rounded "
                    "approximation; see README for their exact ranges)");
  count->add_flag("--force", count_args.force,
                  "Lift the backtracking cell budget");
  count->add_option("--out", count_args.out, "Write the count to a file");

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List tilings (count first, optional renders)");
  enumerate->add_option("--rows", enum_args.rows, "Board rows (>= 1)")->required();
  enumerate->add_option("--cols", enum_args.cols, "Board cols (>= 0)")->required();
  enumerate->add_option("--tile", enum_args.tile, "Tile length K (>= 1)")->required();
  enumerate->add_flag("--tatami", enum_args.tatami,
                      "Only tilings where no four tiles meet at a vertex");
  enumerate->add_option("--limit", enum_args.limit, "Stop after N tilings");
  enumerate->add_flag("--render", enum_args.render,
                      "Draw each tiling in box-drawing characters");
  enumerate->add_flag("--force", enum_args.force,
                      "Lift the enumeration cell budget");
  enumerate->add_option("--out", enum_args.out, "Write the listing to a file");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "Emit or verify a reference table "
               "(general-kx1, kplus1, domino-4xm, tatami)");
  table->add_option("--name", table_args.name, "Table name")->required();
  table->add_option("--format", table_args.format, "csv|json|md");
  table->add_flag("--verify", table_args.verify,
                  "Recompute and compare against the embedded values");
  table->add_option("--out", table_args.out, "Write the table to a file");

  CrosscheckArgs cross_args;
  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "Run the cross-engine agreement suite");
  crosscheck->add_option("--max-cells", cross_args.max_cells,
                         "Largest board area to sweep (default 28)");
  crosscheck->add_option("--families", cross_args.families,
                         "Comma-separated family names (default: all)");
  crosscheck->add_option("--out", cross_args.out, "Write the report to a file");

  SequenceArgs seq_args;
  CLI::App* seq = app.add_subcommand(
      "sequence", "Counts at widths 0..M, OEIS b-file or CSV");
  seq->add_option("--family", seq_args.family,
                  "domino-2xm, domino-3xm, domino-4xm, tromino-4xm, "
                  "tatami-2xm, tatami-3xm, tatami-4xm, square-tile, kplus1")
      ->required();
  seq->add_option("--k", seq_args.param,
                  "Tile length for square-tile and kplus1");
  seq->add_option("--upto", seq_args.upto, "Last board width M");
  seq->add_option("--upto-p", seq_args.upto_p,
                  "kplus1 only: last block count p (width M = p*k)");
  seq->add_option("--format", seq_args.format, "bfile|csv");
  seq->add_option("--out", seq_args.out, "Write the sequence to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (table->parsed()) return run_table(table_args);
    if (crosscheck->parsed()) return run_crosscheck(cross_args);
    if (seq->parsed()) return run_sequence(seq_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "; pass --force to run anyway\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
