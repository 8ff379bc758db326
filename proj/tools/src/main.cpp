// Command-line front end: exact tile-set, window, partition, average and
// self-similarity computations with JSON/TSV/SVG output.
//
// Exit codes: 0 success, 1 failed check or violation, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metallic/averages.hpp"
#include "metallic/coding.hpp"
#include "metallic/equations.hpp"
#include "metallic/geometry.hpp"
#include "metallic/induction.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/serialize.hpp"
#include "metallic/svg.hpp"
#include "metallic/tiles.hpp"

namespace {

using namespace metallic;
using nlohmann::json;

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

// stdout unless --out was given
int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kUsage;
  }
  file << text;
  return file ? kOk : kFailed;
}

QuadNum parse_coordinate(const std::string& text, int n, const char* flag) {
  try {
    return parse_expr(text, n);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

// ---------------------------------------------------------------- tiles --

TileSet build_set(int n, const std::string& which) {
  if (which == "base") return metallic_tiles(n);
  if (which == "extended") return extended_tiles(n);
  return chip_tiles(n);
}

int run_tiles(int n, const std::string& set, const std::string& format,
              const std::string& out) {
  TileSet ts = build_set(n, set);
  if (format == "json") return write_out(tile_set_json(ts), out);
  if (format == "tsv") return write_out(tile_set_tsv(ts), out);
  return write_out(tile_set_svg(ts), out);
}

// --------------------------------------------------------------- verify --

struct SuiteResult {
  std::string name;
  std::optional<std::string> violation;  // empty when the suite passed
};

SuiteResult suite(const std::string& name, std::optional<std::string> v) {
  return {name, std::move(v)};
}

std::optional<std::string> check_cardinalities(int n) {
  int base = metallic_tiles(n).size();
  int chip = chip_tiles(n).size();
  int alphabet = static_cast<int>(enumerate_Vn(n).size());
  if (base != (n + 3) * (n + 3))
    return "base set has " + std::to_string(base) + " tiles";
  if (chip != n * n + 8 * n + 13)
    return "chip set has " + std::to_string(chip) + " tiles";
  if (alphabet != 3 * n + 4)
    return "alphabet has " + std::to_string(alphabet) + " labels";
  return std::nullopt;
}

std::optional<std::string> check_chip_extended(int n) {
  if (chip_tiles(n).tiles != extended_tiles(n).tiles)
    return "chip and extended sets differ";
  return std::nullopt;
}

std::optional<std::string> check_equations(int n) {
  for (const WangTile& t : chip_tiles(n).tiles)
    if (!tile_residual(n, t).zero())
      return "nonzero residual on a chip tile";
  return std::nullopt;
}

std::optional<std::string> check_inverse(int n) {
  for (const WangTile& t : chip_tiles(n).tiles) {
    if (psi(n, t.right, t.top) != t.left || psi(n, t.top, t.right) != t.bottom)
      return "psi fails to recover (left, bottom)";
  }
  return std::nullopt;
}

std::optional<std::string> check_determinism(int n) {
  TileSet chip = chip_tiles(n);
  if (!check_deterministic(chip, Corner::SW).ok)
    return "two chip tiles share a (bottom, left) pair";
  if (!check_deterministic(chip, Corner::NE).ok)
    return "two chip tiles share a (top, right) pair";
  return std::nullopt;
}

Rat random_rat01(std::mt19937_64& g) {
  long den = 2 + long(g() % 9971);
  Rat r(long(g() % den), den);
  r.canonicalize();
  return r;
}

std::optional<std::string> check_factorization(int n) {
  std::mt19937_64 g(20260816);
  QuadNum bstar = QuadNum::beta_star(n);
  for (int trial = 0; trial < 100; ++trial) {
    QuadNum x = QuadNum::rational(random_rat01(g), n);
    QuadNum y = QuadNum::rational(random_rat01(g), n);
    Label left = lambda_floor(n, (x + bstar).frac(), y);
    Label bottom = lambda_floor(n, (y + bstar).frac(), x);
    if (lambda_floor(n, x, y) != theta(n, left, bottom))
      return "coding label differs from theta(left, bottom)";
  }
  return std::nullopt;
}

std::optional<std::string> check_closed_form(int n) {
  std::mt19937_64 g(20260817);
  for (int trial = 0; trial < 100; ++trial) {
    QuadNum x = QuadNum::rational(random_rat01(g), n);
    QuadNum y = QuadNum::rational(random_rat01(g), n);
    ClosedForm cf = dot_d_closed_form(n, x, y);
    if (cf.lhs != cf.rhs) return "closed form mismatch";
  }
  return std::nullopt;
}

std::optional<std::string> check_partition_areas(int n) {
  SidePartitions sides = build_partitions(n);
  QuadNum one = QuadNum::rational(1, n);
  for (const LabeledPartition* part :
       {&sides.east, &sides.north, &sides.west, &sides.south})
    if (part->total_area() != one) return "side partition areas do not sum to 1";
  Label empty_label{0, 0, n + 1};
  const std::vector<Label> alphabet = enumerate_Vn(n);
  for (size_t k = 0; k < alphabet.size(); ++k) {
    bool is_empty = sides.east.atoms[k].empty();
    if (is_empty != (alphabet[k] == empty_label))
      return "unexpected empty atom " + label_word(n, alphabet[k]);
  }
  return std::nullopt;
}

std::optional<std::string> check_partition_tiles(int n) {
  if (tiles_of_partition(n).tiles != metallic_tiles(n).tiles)
    return "refinement tiles differ from the base set";
  return std::nullopt;
}

std::optional<std::string> check_witnesses(int n) {
  if (!range_check(n)) return "a witness point misses its family tile";
  return std::nullopt;
}

int run_verify(int n, const std::string& out) {
  std::vector<SuiteResult> results;
  results.push_back(suite("cardinalities", check_cardinalities(n)));
  results.push_back(suite("chip-equals-extended", check_chip_extended(n)));
  results.push_back(suite("tile-equations", check_equations(n)));
  results.push_back(suite("inverse-map", check_inverse(n)));
  results.push_back(suite("corner-determinism", check_determinism(n)));
  results.push_back(suite("coding-factorization", check_factorization(n)));
  results.push_back(suite("closed-form", check_closed_form(n)));
  results.push_back(suite("partition-areas", check_partition_areas(n)));
  results.push_back(suite("partition-tiles", check_partition_tiles(n)));
  results.push_back(suite("witness-points", check_witnesses(n)));

  json report{{"schema", kSchemaTag}, {"command", "verify"}, {"n", n}};
  json passed = json::array();
  const SuiteResult* first_violation = nullptr;
  for (const SuiteResult& r : results) {
    if (r.violation) {
      if (!first_violation) first_violation = &r;
      std::cerr << "FAIL " << r.name << ": " << *r.violation << "\n";
    } else {
      std::cerr << "ok   " << r.name << "\n";
      passed.push_back(r.name);
    }
  }
  report["passed"] = std::move(passed);
  report["ok"] = first_violation == nullptr;
  if (first_violation)
    report["violation"] = json{{"suite", first_violation->name},
                               {"detail", *first_violation->violation}};
  int rc = write_out(report.dump(2) + "\n", out);
  if (rc != kOk) return rc;
  return first_violation ? kFailed : kOk;
}

// --------------------------------------------------------------- window --

int run_window(int n, const std::string& xs, const std::string& ys, int width,
               int height, long i0, long j0, const std::string& format,
               const std::string& out) {
  TorusPoint p{parse_coordinate(xs, n, "--x"), parse_coordinate(ys, n, "--y")};
  Window w = make_window(n, p, i0, j0, width, height);
  if (format == "json") return write_out(window_json(w), out);
  return write_out(window_svg(w), out);
}

// -------------------------------------------------------------- average --

std::string describe_estimate(const AverageEstimate& est, const QuadNum& target) {
  QuadNum err = QuadNum::rational(est.value, target.field()) - target;
  if (err.sign() < 0) err = -err;
  std::ostringstream line;
  line << (est.axis == Axis::row ? "row" : "column") << " average at k="
       << est.k << ": " << rat_str(est.value) << " ~ "
       << QuadNum::rational(est.value, target.field()).to_double()
       << " (|error| ~ " << err.to_double() << ")";
  return line.str();
}

int run_average(int n, const std::string& xs, const std::string& ys, long k,
                const std::string& axis, bool csv, const std::string& out) {
  TorusPoint p{parse_coordinate(xs, n, "--x"), parse_coordinate(ys, n, "--y")};
  std::vector<Axis> axes;
  if (axis.empty() || axis == "row") axes.push_back(Axis::row);
  if (axis.empty() || axis == "col") axes.push_back(Axis::column);
  std::ostringstream text;
  if (csv) {
    text << "k,axis,value,error\n";
    std::vector<long> horizons;
    for (long h = 1; h < k; h *= 2) horizons.push_back(h);
    horizons.push_back(k);  // end exactly at the requested horizon
    for (Axis a : axes) {
      const QuadNum& target = a == Axis::row ? p.y : p.x;
      for (long h : horizons) {
        AverageEstimate est = phi_estimate(n, p, h, a);
        QuadNum err = QuadNum::rational(est.value, n) - target;
        if (err.sign() < 0) err = -err;
        text << h << "," << (a == Axis::row ? "row" : "col") << ","
             << rat_str(est.value) << "," << err.to_double() << "\n";
      }
    }
  } else {
    for (Axis a : axes)
      text << describe_estimate(phi_estimate(n, p, k, a),
                                a == Axis::row ? p.y : p.x)
           << "\n";
  }
  return write_out(text.str(), out);
}

// ------------------------------------------------------------ partition --

int run_partition(int n, const std::string& which, const std::string& format,
                  const std::string& out) {
  PartitionDoc doc = named_partition(n, which);
  if (format == "json") return write_out(partition_json(doc), out);
  return write_out(partition_svg(doc), out);
}

// -------------------------------------------------------------- selfsim --

std::string substitution_text(const Substitution2d& s) {
  int width = 1;
  for (const auto& block : s.rules)
    for (const auto& row : block)
      for (int entry : row)
        width = std::max(width, (int)std::to_string(entry).size());
  std::ostringstream text;
  for (int k = 0; k < s.size(); ++k) {
    std::string head = std::to_string(k) + " -> ";
    std::string pad(head.size(), ' ');
    // print top row first, the way substitution tables are usually shown
    for (int r = s.rows(k) - 1; r >= 0; --r) {
      text << (r == s.rows(k) - 1 ? head : pad);
      for (int c = 0; c < s.cols(k); ++c) {
        std::string word = std::to_string(s.rules[k][r][c]);
        text << std::string(width - word.size(), ' ') << word
             << (c + 1 < s.cols(k) ? " " : "");
      }
      text << "\n";
    }
  }
  return text.str();
}

int run_selfsim(int n, const std::string& format, bool match_paper,
                const std::string& out) {
  SelfSimilarity ss = self_similarity(n);
  if (!ss.p3_matches || !ss.re1_recovered || !ss.re2_recovered) {
    std::cerr << "error: induction did not reproduce the partition\n";
    return kFailed;
  }
  if (match_paper) {
    Substitution2d ref = reference_selfsim_3();
    auto bijection = conjugating_bijection(ref, ss.s123);
    if (!bijection) {
      std::cerr << "no conjugating bijection matches the reference table\n";
      return kFailed;
    }
    std::ostringstream text;
    bool identity = true;
    for (size_t k = 0; k < bijection->size(); ++k)
      if ((*bijection)[k] != (int)k) identity = false;
    text << "reference table matched; bijection"
         << (identity ? " is the identity" : ":") << "\n";
    if (!identity)
      for (size_t k = 0; k < bijection->size(); ++k)
        text << "  " << k << " -> " << (*bijection)[k] << "\n";
    return write_out(text.str(), out);
  }
  SubstitutionDoc doc{n, ss.s123, metallic_tiles(n)};
  if (format == "json") return write_out(substitution_json(doc), out);
  if (format == "svg") return write_out(substitution_svg(doc), out);
  return write_out(substitution_text(doc.subst), out);
}

// ---------------------------------------------------------------- check --

int run_check(const std::string& path, const std::string& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read " << path << "\n";
    return kUsage;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  json report{{"schema", kSchemaTag}, {"command", "check"}, {"file", path}};
  bool ok = false;
  try {
    Window w = parse_window(buffer.str());
    report["n"] = w.n;
    json violations = json::array();
    for (const AdjacencyViolation& v : check_valid(w))
      violations.push_back(json{
          {"i", v.i},
          {"j", v.j},
          {"direction", v.horizontal ? "horizontal" : "vertical"}});
    ok = violations.empty();
    report["violations"] = std::move(violations);
    report["ok"] = ok;
  } catch (const std::invalid_argument& e) {
    report["ok"] = false;
    report["error"] = e.what();
  }
  int rc = write_out(report.dump(2) + "\n", out);
  if (rc != kOk) return rc;
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for the metallic-mean Wang tile family"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int n = 1;
  std::string set = "base", format, which = "east", xs, ys, axis, out, file;
  int width = 1, height = 1;
  long i0 = 0, j0 = 0, horizon = 100;
  bool csv = false, match_paper = false;

  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "family parameter")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_out = [&out](CLI::App* cmd) {
    cmd->add_option("--out", out, "write output to this file");
  };

  CLI::App* tiles = app.add_subcommand("tiles", "emit a Wang tile set");
  add_n(tiles);
  tiles->add_option("--set", set, "which set")
      ->check(CLI::IsMember({"base", "extended", "chip"}));
  tiles->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "svg"}));
  add_out(tiles);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  add_n(verify);
  add_out(verify);

  CLI::App* window = app.add_subcommand("window", "window of a configuration");
  add_n(window);
  window->add_option("--x", xs, "base point x, \"p/q\" or \"p/q+r/s*beta\"")
      ->required();
  window->add_option("--y", ys, "base point y")->required();
  window->add_option("--width", width, "cells per row")
      ->required()
      ->check(CLI::PositiveNumber);
  window->add_option("--height", height, "cells per column")
      ->required()
      ->check(CLI::PositiveNumber);
  window->add_option("--i0", i0, "leftmost column index");
  window->add_option("--j0", j0, "bottom row index");
  window->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));
  add_out(window);

  CLI::App* average = app.add_subcommand("average", "Birkhoff label averages");
  add_n(average);
  average->add_option("--x", xs, "base point x")->required();
  average->add_option("--y", ys, "base point y")->required();
  average->add_option("--k", horizon, "half-width of the horizon")
      ->required()
      ->check(CLI::PositiveNumber);
  average->add_option("--axis", axis, "restrict to one axis")
      ->check(CLI::IsMember({"row", "col"}));
  average->add_flag("--csv", csv, "doubling-horizon table");
  add_out(average);

  CLI::App* partition = app.add_subcommand("partition", "coding partitions");
  add_n(partition);
  partition->add_option("--which", which, "east|north|west|south|refined")
      ->check(CLI::IsMember({"east", "north", "west", "south", "refined"}));
  partition->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));
  add_out(partition);

  CLI::App* selfsim = app.add_subcommand("selfsim", "two-step induction");
  add_n(selfsim);
  selfsim->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "svg"}));
  selfsim->add_flag("--match-paper", match_paper,
                    "compare against the built-in n=3 reference table");
  add_out(selfsim);

  CLI::App* check = app.add_subcommand("check", "validate a window document");
  check->add_option("file", file, "window JSON document")->required();
  add_out(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*tiles)
      return run_tiles(n, set, format.empty() ? "json" : format, out);
    if (*verify) return run_verify(n, out);
    if (*window)
      return run_window(n, xs, ys, width, height, i0, j0,
                        format.empty() ? "json" : format, out);
    if (*average) return run_average(n, xs, ys, horizon, axis, csv, out);
    if (*partition)
      return run_partition(n, which, format.empty() ? "json" : format, out);
    if (*selfsim) {
      if (match_paper && n != 3) {
        std::cerr << "error: --match-paper requires --n 3\n";
        return kUsage;
      }
      return run_selfsim(n, format.empty() ? "text" : format, match_paper, out);
    }
    if (*check) return run_check(file, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
