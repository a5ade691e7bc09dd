#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"

namespace {

// Temporary graph files for driving the CLI end to end.
class GraphFile {
 public:
  explicit GraphFile(std::string const& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path()
            / ("gis-cli-test-" + std::to_string(++counter) + "-"
               + std::to_string(static_cast<unsigned>(getpid())) + ".graph");
    std::ofstream out(path_);
    out << text;
  }

  ~GraphFile() { std::filesystem::remove(path_); }

  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = gis::cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::string const kP2 = "vertex u\nvertex v\nedge e u v\n";
std::string const kP3 =
    "vertex v1\nvertex v2\nvertex v3\nedge e1 v1 v2\nedge e2 v2 v3\n";
std::string const kLoop = "vertex v\nedge e v v\n";
std::string const kEdgeless3 = "vertex a\nvertex b\nvertex c\n";

}  // namespace

TEST_CASE("enumerate prints the canonical element list") {
  GraphFile f(kP2);
  auto r = run_cli({"enumerate", f.path()});
  CHECK(r.status == 0);
  CHECK(r.out == "6 elements: 0 @u|@u @v|@v e|@v @v|e e|e\n");
  CHECK(r.err.empty());
}

TEST_CASE("enumerate --quiet and --json") {
  GraphFile f(kP2);
  auto quiet = run_cli({"enumerate", "--quiet", f.path()});
  CHECK(quiet.status == 0);
  CHECK(quiet.out == "6 elements\n");

  auto json = run_cli({"enumerate", "--json", f.path()});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"count\": 6") != std::string::npos);
  CHECK(json.out.find("\"bound\": null") != std::string::npos);
  CHECK(json.out.find("\"e|e\"") != std::string::npos);
}

TEST_CASE("enumerate needs a bound on cyclic graphs") {
  GraphFile f(kLoop);
  auto r = run_cli({"enumerate", f.path()});
  CHECK(r.status != 0);
  CHECK(r.err.find("infinite") != std::string::npos);

  auto bounded = run_cli({"enumerate", "--bound", "1", f.path()});
  CHECK(bounded.status == 0);
  CHECK(bounded.out == "5 elements (bound 1): 0 @v|@v e|@v @v|e e|e\n");
}

TEST_CASE("reduce prints the normal form") {
  GraphFile f(kP2);
  auto r = run_cli({"reduce", f.path(), "e* e"});
  CHECK(r.status == 0);
  CHECK(r.out == "@v|@v\n");

  auto zero = run_cli({"reduce", f.path(), "u v"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "0\n");

  auto bad = run_cli({"reduce", f.path(), "nope"});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("unknown token") != std::string::npos);
}

TEST_CASE("mul multiplies element literals") {
  GraphFile f(kP2);
  auto r = run_cli({"mul", f.path(), "e|@v", "@v|e"});
  CHECK(r.status == 0);
  CHECK(r.out == "e|e\n");

  auto zero = run_cli({"mul", f.path(), "@v|e", "@v|e"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "0\n");

  auto bad = run_cli({"mul", f.path(), "e|e1.e2", "@v|e"});
  CHECK(bad.status != 0);
}

TEST_CASE("green D on P3 has classes of sizes 1 1 4 9") {
  GraphFile f(kP3);
  auto r = run_cli({"green", "D", f.path()});
  CHECK(r.status == 0);
  CHECK(r.out.substr(0, r.out.find('\n'))
        == "4 classes: sizes 1 1 4 9");
  CHECK(r.out.find("{0}\n") != std::string::npos);

  auto quiet = run_cli({"green", "--quiet", "D", f.path()});
  CHECK(quiet.out == "4 classes: sizes 1 1 4 9\n");

  auto bad = run_cli({"green", "X", f.path()});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("unknown Green relation") != std::string::npos);
}

TEST_CASE("green --json and --dot emit structured output") {
  GraphFile f(kP2);
  auto json = run_cli({"green", "--json", "D", f.path()});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"relation\": \"D\"") != std::string::npos);

  auto dot = run_cli({"green", "--dot", "D", f.path()});
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("digraph eggbox", 0) == 0);
}

TEST_CASE("primitive") {
  GraphFile yes(kEdgeless3);
  auto r = run_cli({"primitive", yes.path()});
  CHECK(r.status == 0);
  CHECK(r.out == "primitive: yes\n");

  GraphFile no(kP2);
  auto r2 = run_cli({"primitive", no.path()});
  CHECK(r2.status == 0);
  CHECK(r2.out == "primitive: no\n");
}

TEST_CASE("idempotents with covers, DOT and JSON") {
  GraphFile f(kP2);
  auto r = run_cli({"idempotents", f.path()});
  CHECK(r.status == 0);
  CHECK(r.out
        == "4 idempotents: 0 @u|@u @v|@v e|e\n"
           "covers: 0<@v|@v 0<e|e e|e<@u|@u\n");

  auto dot = run_cli({"idempotents", "--dot", f.path()});
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("digraph hasse", 0) == 0);
  CHECK(dot.out.find("rank=min") != std::string::npos);

  auto json = run_cli({"idempotents", "--json", f.path()});
  CHECK(json.status == 0);
  CHECK(json.out.find("\"covers\"") != std::string::npos);
}

TEST_CASE("local prints the submonoid") {
  GraphFile f(kP2);
  auto r = run_cli({"local", "v", f.path()});
  CHECK(r.status == 0);
  CHECK(r.out == "2 elements: 0 @v|@v\n");

  auto r2 = run_cli({"local", "u", f.path()});
  CHECK(r2.status == 0);
  CHECK(r2.out == "3 elements: 0 @u|@u e|e\n");

  auto bad = run_cli({"local", "zz", f.path()});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("unknown vertex") != std::string::npos);
}

TEST_CASE("order reports both directions") {
  GraphFile f(kP3);
  auto r = run_cli({"order", f.path(), "e1.e2|e1.e2", "e1|e1"});
  CHECK(r.status == 0);
  CHECK(r.out
        == "e1.e2|e1.e2 <= e1|e1: yes\n"
           "e1|e1 <= e1.e2|e1.e2: no\n");

  auto bad = run_cli({"order", f.path(), "e1|@v2", "e1|e1"});
  CHECK(bad.status != 0);  // not idempotent
}

TEST_CASE("usage errors exit nonzero") {
  auto r = run_cli({"frobnicate"});
  CHECK(r.status != 0);

  auto missing = run_cli({"enumerate"});
  CHECK(missing.status != 0);

  auto nofile = run_cli({"enumerate", "/nonexistent/g.graph"});
  CHECK(nofile.status != 0);
  CHECK(nofile.err.find("cannot open") != std::string::npos);

  GraphFile broken("vertex u\nedge e u w\n");
  auto parse = run_cli({"enumerate", broken.path()});
  CHECK(parse.status != 0);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("help is available") {
  auto r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
}
