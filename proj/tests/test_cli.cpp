#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "metallic/serialize.hpp"
#include "metallic/tiles.hpp"

using namespace metallic;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only; stderr goes to a scratch file
};

std::string scratch_path(const char* stem) {
  static int counter = 0;
  std::ostringstream path;
  path << "cli_scratch_" << stem << "_" << counter++ << ".txt";
  return path.str();
}

// run the real binary and capture its standard output
RunResult run(const std::string& args) {
  std::string out_path = scratch_path("out");
  std::string command =
      std::string(CLI_BINARY) + " " + args + " > " + out_path + " 2> /dev/null";
  int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream file(out_path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  r.output = buffer.str();
  std::remove(out_path.c_str());
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("tiles subcommand emits parseable sets in all three formats") {
  RunResult json = run("tiles --n 3 --set base --format json");
  CHECK(json.exit_code == 0);
  TileSet ts = parse_tile_set(json.output);
  CHECK(ts.n == 3);
  CHECK(ts.kind == TileSetKind::base);
  CHECK(ts.size() == 36);
  CHECK(ts.tiles == metallic_tiles(3).tiles);

  RunResult chip = run("tiles --n 4 --set chip --format json");
  CHECK(parse_tile_set(chip.output).size() == 4 * 4 + 8 * 4 + 13);

  RunResult tsv = run("tiles --n 1 --format tsv");
  CHECK(tsv.exit_code == 0);
  CHECK(tsv.output.substr(0, tsv.output.find('\n')) == "000\t000\t001\t001");

  RunResult svg = run("tiles --n 2 --format svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.output.rfind("<svg", 0) == 0);
}

TEST_CASE("verify subcommand passes and reports its suites") {
  RunResult r = run("verify --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"ok\": true") != std::string::npos);
  CHECK(r.output.find("\"witness-points\"") != std::string::npos);
  CHECK(r.output.find(kSchemaTag) != std::string::npos);
}

TEST_CASE("window documents flow from emission through validation") {
  std::string path = scratch_path("window");
  RunResult w = run("window --n 2 --x 2/7 --y 1/3+1/2*beta --width 4 "
                    "--height 3 --i0 -1 --j0 2 --out " + path);
  CHECK(w.exit_code == 0);
  CHECK(w.output.empty());  // --out redirects the document

  Window parsed = parse_window(slurp(path));
  CHECK(parsed.n == 2);
  CHECK(parsed.i0 == -1);
  CHECK(parsed.j0 == 2);
  CHECK(parsed.width == 4);
  CHECK(parsed.height == 3);

  RunResult ok = run("check " + path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"ok\": true") != std::string::npos);

  // corrupt one cell: the checker must flag it and exit 1
  std::string text = slurp(path);
  size_t cells = text.find("\"cells\"");
  size_t digit = text.find_first_of("0123456789", cells + 8);
  text.replace(digit, 1, text[digit] == '0' ? "1" : "0");
  std::string bad_path = scratch_path("bad");
  std::ofstream(bad_path, std::ios::binary) << text;
  RunResult bad = run("check " + bad_path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"ok\": false") != std::string::npos);
  std::remove(path.c_str());
  std::remove(bad_path.c_str());
}

TEST_CASE("average subcommand reports both axes and csv horizons") {
  RunResult both = run("average --n 2 --x 2/7 --y 3/11 --k 100");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("row average at k=100") != std::string::npos);
  CHECK(both.output.find("column average at k=100") != std::string::npos);

  RunResult csv = run("average --n 2 --x 2/7 --y 3/11 --k 8 --axis row --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("k,axis,value,error\n", 0) == 0);
  // horizons 1, 2, 4, 8 plus the header
  int lines = 0;
  for (char c : csv.output)
    if (c == '\n') ++lines;
  CHECK(lines == 5);
}

TEST_CASE("partition subcommand emits parseable documents") {
  RunResult east = run("partition --n 2 --which east --format json");
  CHECK(east.exit_code == 0);
  PartitionDoc doc = parse_partition(east.output);
  CHECK(doc.name == "east");
  CHECK(doc.partition.atoms.size() == 10);  // 3n+4 labels

  RunResult svg = run("partition --n 2 --which refined --format svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.output.rfind("<svg", 0) == 0);
}

TEST_CASE("selfsim subcommand emits the substitution and matches the table") {
  RunResult text = run("selfsim --n 1 --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.output.rfind("0 -> ", 0) == 0);

  RunResult json = run("selfsim --n 1 --format json");
  CHECK(json.exit_code == 0);
  SubstitutionDoc doc = parse_substitution(json.output);
  CHECK(doc.subst.size() == 16);

  RunResult match = run("selfsim --n 3 --match-paper");
  CHECK(match.exit_code == 0);
  CHECK(match.output.find("identity") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("bogus").exit_code == 2);
  CHECK(run("tiles --n 0").exit_code == 2);
  CHECK(run("tiles --n 3 --format yaml").exit_code == 2);
  CHECK(run("window --n 2 --x nonsense --y 0 --width 2 --height 2").exit_code == 2);
  CHECK(run("selfsim --n 2 --match-paper").exit_code == 2);
  CHECK(run("check no_such_file.json").exit_code == 2);
}
