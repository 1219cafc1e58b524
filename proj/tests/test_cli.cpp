#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tverberg/io.hpp"

namespace fs = std::filesystem;
using tverberg::io::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tverberg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tverberg_cli_" + std::to_string(std::rand()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("bound") {
  auto r = run({"bound", "plain", "--n", "100", "--d", "1", "--r", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["t"] == 26);
  CHECK(r.json()["formula"] == "plain");
  r = run({"bound", "epsilon", "--t", "25", "--d", "1", "--r", "2", "--eps", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["N"].get<int>() <= 100);
  r = run({"bound", "carath", "--n", "100", "--d", "2", "--r", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["depth"].get<int>() >= 27);
  r = run({"bound", "reay", "--m", "100", "--d", "1", "--r", "3", "--k", "2"});
  CHECK(r.json()["t"] == 8);
  CHECK(r.json().contains("lambda"));
  r = run({"bound", "colored", "--n", "200", "--d", "1", "--r", "3"});
  CHECK(r.json()["t"] == 77);
  CHECK(run({"bound", "plain", "--n", "0", "--d", "1", "--r", "2"}).code == 2);
  CHECK(run({"bound", "epsilon", "--t", "1", "--d", "1", "--r", "2", "--eps", "1.5"}).code == 2);
  CHECK(run({"bound"}).code == 2);
  CHECK(run({"bound", "plain", "--n", "ten", "--d", "1", "--r", "2"}).code == 2);
}

TEST_CASE("gen") {
  TempDir tmp;
  auto r = run({"gen", "line", "--n", "12"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["dimension"] == 1);
  REQUIRE(j["points"].size() == 12);
  CHECK(j["points"][0][0] == "1/1");
  CHECK(j["points"][11][0] == "12/1");

  r = run({"gen", "colored-classes", "--classes", "5", "--r", "3", "--d", "2", "--seed", "4"});
  REQUIRE(r.code == 0);
  j = r.json();
  CHECK(j["points"].size() == 15);
  CHECK(j["colors"] == Json({0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4}));

  auto a = run({"gen", "uniform-ball", "--n", "30", "--d", "3", "--seed", "99"});
  auto b = run({"gen", "uniform-ball", "--n", "30", "--d", "3", "--seed", "99"});
  auto c = run({"gen", "uniform-ball", "--n", "30", "--d", "3", "--seed", "98"});
  CHECK(a.json()["points"] == b.json()["points"]);
  CHECK(a.json()["points"] != c.json()["points"]);

  r = run({"gen", "grid", "--side", "3", "--d", "2", "--out", tmp.file("grid.json")});
  REQUIRE(r.code == 0);
  CHECK(tverberg::io::read_config(tmp.file("grid.json")).size() == 9);
}

TEST_CASE("partition and verify round trip") {
  TempDir tmp;
  REQUIRE(run({"gen", "line", "--n", "12", "--out", tmp.file("line.json")}).code == 0);
  auto r = run({"partition", tmp.file("line.json"), "--r", "2", "--t", "4", "--seed", "5", "--out-partition",
                tmp.file("p.json"), "--out-report", tmp.file("rep.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["status"] == "certified");
  const auto claimed = tverberg::io::read_json_file(tmp.file("rep.json"))["tolerance"].get<int>();
  CHECK(claimed >= 4);
  CHECK(tverberg::io::read_json_file(tmp.file("p.json")).contains("manifest"));

  auto v = run({"verify", tmp.file("line.json"), tmp.file("p.json"), "--method", "exhaustive"});
  REQUIRE(v.code == 0);
  CHECK(v.json()["tolerance"] == claimed);
  CHECK(v.json()["method"] == "exhaustive-oracle");
  v = run({"verify", tmp.file("line.json"), tmp.file("p.json")});
  CHECK(v.json()["tolerance"] == claimed);
  CHECK(v.json()["witness_removal"].size() == static_cast<std::size_t>(claimed + 1));

  // Pigeonhole: 12 points, r = 2, t = 6.
  r = run({"partition", tmp.file("line.json"), "--r", "2", "--t", "6"});
  CHECK(r.code == 4);
  CHECK(r.err.find("unachievable") != std::string::npos);
  // Achievable in principle, but not within one trial.
  r = run({"partition", tmp.file("line.json"), "--r", "2", "--t", "5", "--max-trials", "1"});
  CHECK(r.code == 4);

  CHECK(run({"partition", tmp.file("missing.json"), "--r", "2", "--t", "1"}).code == 2);
  tmp.write("bad.json", "{\"dimension\": 1, \"points\": [[\"x\"]]}");
  CHECK(run({"partition", tmp.file("bad.json"), "--r", "2", "--t", "0"}).code == 2);
  tmp.write("short.json", "{\"r\": 2, \"labels\": [0, 1]}");
  CHECK(run({"verify", tmp.file("line.json"), tmp.file("short.json")}).code == 2);
}

TEST_CASE("verify examples") {
  TempDir tmp;
  tmp.write("two.json", "{\"dimension\": 1, \"points\": [[\"1\"], [\"-1\"]]}");
  tmp.write("split.json", "{\"r\": 2, \"labels\": [0, 1]}");
  auto v = run({"verify", tmp.file("two.json"), tmp.file("split.json")});
  REQUIRE(v.code == 0);
  CHECK(v.json()["tolerance"] == -1);

  tmp.write("four.csv", "x\n1\n-1\n1\n-1\n");
  tmp.write("pairs.json", "{\"r\": 2, \"labels\": [0, 0, 1, 1]}");
  auto lifted = run({"verify", tmp.file("four.csv"), tmp.file("pairs.json")});
  auto exact = run({"verify", tmp.file("four.csv"), tmp.file("pairs.json"), "--method", "exhaustive"});
  CHECK(lifted.json()["tolerance"] == exact.json()["tolerance"]);
  CHECK(exact.json()["tolerance"] == 1);

  tmp.write("line.csv", "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n");
  tmp.write("alt.json", "{\"r\": 2, \"labels\": [0, 1, 0, 1, 0, 1, 0, 1, 0, 1]}");
  auto capped = run({"verify", tmp.file("line.csv"), tmp.file("alt.json"), "--method", "exhaustive", "--t-cap", "0"});
  CHECK(capped.json()["tolerance"] == 0);
  CHECK(capped.json()["capped"] == true);
  auto over = run({"verify", tmp.file("line.csv"), tmp.file("alt.json"), "--method", "exhaustive", "--budget", "3"});
  CHECK(over.code == 3);

  setenv("TVERBERG_BUDGET", "3", 1);
  CHECK(run({"verify", tmp.file("line.csv"), tmp.file("alt.json"), "--method", "exhaustive"}).code == 3);
  setenv("TVERBERG_BUDGET", "lots", 1);
  CHECK(run({"verify", tmp.file("line.csv"), tmp.file("alt.json"), "--method", "exhaustive"}).code == 2);
  unsetenv("TVERBERG_BUDGET");
}

TEST_CASE("colored and reay modes") {
  TempDir tmp;
  tmp.write("classes.csv", "x,color\n1,0\n-1,0\n2,1\n-2,1\n3,2\n-3,2\n4,3\n-4,3\n");
  auto r = run({"partition", tmp.file("classes.csv"), "--r", "2", "--t", "1", "--mode", "colored", "--seed", "3",
                "--out-partition", tmp.file("p.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["report"]["removal_unit"] == "classes");
  auto v = run({"verify", tmp.file("classes.csv"), tmp.file("p.json"), "--mode", "colored", "--method", "exhaustive"});
  REQUIRE(v.code == 0);
  CHECK(v.json()["tolerance"] == r.json()["report"]["tolerance"]);

  tmp.write("lopsided.csv", "x,color\n1,0\n-1,0\n2,1\n");
  r = run({"partition", tmp.file("lopsided.csv"), "--r", "2", "--t", "0", "--mode", "colored"});
  CHECK(r.code == 2);
  r = run({"partition", tmp.file("classes.csv"), "--r", "2", "--t", "4", "--mode", "colored"});
  CHECK(r.code == 4);

  tmp.write("sym.csv", "1\n-1\n2\n-2\n3\n-3\n4\n-4\n5\n-5\n6\n-6\n");
  r = run({"partition", tmp.file("sym.csv"), "--r", "3", "--t", "1", "--mode", "reay", "--k", "2", "--seed", "2",
           "--out-partition", tmp.file("reay.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["report"]["tuples"].size() == 3);
  v = run({"verify", tmp.file("sym.csv"), tmp.file("reay.json"), "--mode", "reay", "--k", "2", "--method",
           "exhaustive"});
  CHECK(v.json()["tolerance"] == r.json()["report"]["tolerance"]);
  CHECK(run({"partition", tmp.file("sym.csv"), "--r", "3", "--t", "1", "--mode", "reay", "--k", "4"}).code == 2);
}

TEST_CASE("depth") {
  TempDir tmp;
  tmp.write("square.json", "{\"dimension\": 2, \"points\": [[\"1\",\"1\"],[\"1\",\"-1\"],[\"-1\",\"1\"],[\"-1\",\"-1\"]]}");
  tmp.write("two.csv", "1\n-1\n");
  tmp.write("far.csv", "1\n2\n");
  CHECK(run({"depth", tmp.file("square.json")}).json()["depth"] == 2);
  CHECK(run({"depth", tmp.file("two.csv")}).json()["depth"] == 1);
  CHECK(run({"depth", tmp.file("far.csv")}).json()["depth"] == 0);
  CHECK(run({"depth", tmp.file("far.csv"), "--center", "3/2"}).json()["depth"] == 1);
  auto b = run({"depth", tmp.file("square.json"), "--blocks", "0,3;1,2"});
  REQUIRE(b.code == 0);
  CHECK(b.json()["mode"] == "block-depth");
  CHECK(b.json()["depth"] == 2);
  CHECK(run({"depth", tmp.file("square.json"), "--center", "1"}).code == 2);
  CHECK(run({"depth", tmp.file("square.json"), "--blocks", "0,1"}).code == 2);
}

TEST_CASE("plot") {
  TempDir tmp;
  REQUIRE(run({"gen", "uniform-ball", "--n", "16", "--d", "2", "--seed", "1", "--out", tmp.file("ball.json")}).code == 0);
  auto r = run({"plot", tmp.file("ball.json"), "--out", tmp.file("plain.svg")});
  REQUIRE(r.code == 0);
  auto svg = slurp(tmp.file("plain.svg"));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("class=\"witness\"") == std::string::npos);

  REQUIRE(run({"partition", tmp.file("ball.json"), "--r", "2", "--t", "2", "--seed", "1", "--out-partition",
               tmp.file("p.json"), "--out-report", tmp.file("rep.json")})
              .code == 0);
  r = run({"plot", tmp.file("ball.json"), "--partition", tmp.file("p.json"), "--report", tmp.file("rep.json"), "--out",
           tmp.file("hl.svg")});
  REQUIRE(r.code == 0);
  svg = slurp(tmp.file("hl.svg"));
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("class=\"witness\"") != std::string::npos);
  CHECK(r.json()["highlighted"].get<int>() >= 3);

  REQUIRE(run({"gen", "uniform-ball", "--n", "5", "--d", "3", "--out", tmp.file("ball3.json")}).code == 0);
  CHECK(run({"plot", tmp.file("ball3.json"), "--out", tmp.file("x.svg")}).code == 2);
}

TEST_CASE("identical manifests give byte-identical output") {
  TempDir tmp;
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  REQUIRE(run({"gen", "uniform-ball", "--n", "14", "--d", "2", "--seed", "8", "--out", tmp.file("in.json")}).code == 0);
  const std::vector<std::string> args{"partition", tmp.file("in.json"), "--r", "2", "--t", "1", "--seed", "3"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["manifest"]["timestamp"] == "2023-11-14T22:13:20Z");
  CHECK(a.json()["manifest"]["seed"] == 3);
  auto c = run({"partition", tmp.file("in.json"), "--r", "2", "--t", "1", "--seed", "4"});
  CHECK(c.json()["manifest"]["inputs_digest"] != a.json()["manifest"]["inputs_digest"]);
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("fnv1a") {
  CHECK(tverberg::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(tverberg::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
