#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fewdist/cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using fewdist::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("fewdist-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Json> ndjson(const std::string& text) {
  std::vector<Json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(Json::parse(line));
  return v;
}

std::string golden(const std::string& name) { return slurp(std::string(FEWDIST_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("stats") {
  Scratch s;
  auto a = s.file("a.txt", "0\n1\n2\n3\n");
  auto r = run({"stats", a, "--distances"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"delta_card\":10}\n");
  CHECK(run({"stats", a, "--diff", "--product", "--distances"}).out == "{\"diff_card\":7,\"delta_card\":10}\n");
  CHECK(run({"stats", s.file("g.txt", "1\n2\n4\n"), "--ratio"}).out == "{\"ratio_card\":5}\n");
  auto p = s.file("p.txt", "0,0\n1,0\n0,1\n");
  CHECK(run({"stats", p, "--points", "--slopes", "--distances"}).out == "{\"delta_card\":3,\"slope_card\":3}\n");
}

TEST_CASE("exit codes") {
  Scratch s;
  auto a = s.file("a.txt", "0\n1\n2\n3\n");
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"stats"}).code == 1);
  CHECK(run({"--format", "xml", "stats", a}).code == 1);
  CHECK(run({"verify", "nonsense", a}).code == 1);

  auto bad = run({"stats", s.file("bad.txt", "1\n2\nnope\n")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(run({"stats", s.path("missing.txt")}).code == 1);

  auto infeasible = run({"--max-pairs", "3", "stats", a, "--diff"});
  CHECK(infeasible.code == 3);
  CHECK(infeasible.out.empty());

  // An instance the audit rejects at runtime.
  auto zero = run({"verify", "product-sumset", s.file("z.txt", "0\n1\n")});
  CHECK(zero.code == 2);
  CHECK(ndjson(zero.out)[0]["error"] == "zero divisor element");

  // Collinear input is n/a, which is a success.
  auto col = run({"verify", "ungar", "--points", s.file("c.txt", "0,0\n1,1\n2,2\n")});
  CHECK(col.code == 0);
  CHECK(ndjson(col.out)[0]["holds"] == "n/a");

  CHECK(run({"search", "--n", "4", "--universe", "30"}).code == 1);  // no seed
  CHECK(run({"search", "--n", "40", "--universe", "30", "--seed", "1"}).code == 1);
}

TEST_CASE("verify") {
  Scratch s;
  auto r = run({"verify", "differencing", s.file("a.txt", "0\n1\n2\n")});
  CHECK(r.code == 0);
  CHECK(ndjson(r.out)[0]["holds"] == "true");

  auto sweep = run({"verify", "plunnecke", "--exhaustive-small"});
  CHECK(sweep.code == 0);
  auto records = ndjson(sweep.out);
  CHECK(records.size() == 627 * 3);
  for (const auto& rec : records) CHECK(rec["holds"] == "true");

  auto pl = run({"verify", "plunnecke", "--m", "1", "--n", "1", s.file("s.txt", "0\n1\n3\n")});
  CHECK(ndjson(pl.out)[0]["lhs"] == "7");
  CHECK(ndjson(pl.out)[0]["rhs"] == "12");
}

TEST_CASE("richline") {
  Scratch s;
  auto r = run({"richline", s.file("a.txt", "0\n1\n2\n3\n")});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["d"] == "1");
  CHECK(j["count"] == 3);
  CHECK(j["bound"] == "2");
  auto two = Json::parse(run({"richline", s.file("b.txt", "0\n1\n")}).out);
  CHECK(two["d"] == "1");
  CHECK(two["count"] == 1);
  auto ap = Json::parse(run({"richline", s.file("c.txt", "5\n8\n11\n14\n17\n20\n23\n26\n")}).out);
  CHECK(ap["d"] == "3");
  CHECK(ap["count"] == 7);
  CHECK(run({"richline", s.file("d.txt", "4\n")}).code == 2);
}

TEST_CASE("scan") {
  auto r = run({"scan", "--family", "ap", "--sizes", "4,8,16"});
  CHECK(r.code == 0);
  auto recs = ndjson(r.out);
  REQUIRE(recs.size() == 6);
  int main = 0, rudin = 0;
  for (const auto& rec : recs) (rec["statement_id"] == "MAIN_THEOREM" ? main : rudin)++;
  CHECK(main == 3);
  CHECK(rudin == 3);
  auto empty = run({"scan", "--family", "ap", "--sizes", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run({"scan", "--family", "hexagon", "--sizes", "4"}).code == 1);
}

TEST_CASE("search is deterministic") {
  std::vector<std::string> args{"search", "--n", "4", "--universe", "30", "--objective", "min-distances",
                                "--seed", "7", "--iterations", "500", "--restarts", "2"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["rng"]["seed"] == 7);

  Scratch s;
  auto cfg = s.file("cfg.json", R"({"n": 4, "universe": 30, "iterations": 500, "restarts": 2, "seed": 7})");
  CHECK(run({"search", "--config", cfg, "--objective", "min-distances"}).out == a.out);
  auto bad = run({"search", "--config", s.file("bad.json", R"({"n": 4, "cooling_rate": 2, "seed": 1})")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("cooling_rate") != std::string::npos);
}

TEST_CASE("CSV mirrors JSON") {
  Scratch s;
  auto a = s.file("a.txt", "0\n1\n2\n3\n");
  auto csv = run({"--format", "csv", "stats", a});
  auto json = Json::parse(run({"stats", a}).out);
  std::istringstream in(csv.out);
  std::string header;
  std::getline(in, header);
  std::string expected;
  for (auto it = json.begin(); it != json.end(); ++it) expected += (expected.empty() ? "" : ",") + it.key();
  CHECK(header == expected);
  CHECK(csv.out.find('\r') == std::string::npos);

  // Nested values are quoted JSON with doubled quotes.
  auto v = run({"--format", "csv", "verify", "plunnecke", a});
  CHECK(v.out.rfind("statement_id,sizes,lhs,rhs,ratio,approx_ratio,holds,witnesses,notes,error\n", 0) == 0);
  CHECK(v.out.find("\"{\"\"S\"\":4") != std::string::npos);
}

TEST_CASE("--output writes the report to a file") {
  Scratch s;
  auto a = s.file("a.txt", "0\n1\n2\n3\n");
  auto r = run({"--output", s.path("out.json"), "stats", a, "--diff"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(s.path("out.json")) == "{\"diff_card\":7}\n");
}

TEST_CASE("goldens") {
  Scratch s;
  auto a = s.file("a.txt", "0\n1\n2\n3\n");
  CHECK(run({"stats", a}).out == golden("stats_0123.json"));
  CHECK(run({"richline", a}).out == golden("richline_0123.json"));
  CHECK(run({"verify", "main-theorem", "--depth", "full-chain", a}).out == golden("main_full_0123.ndjson"));
  CHECK(run({"scan", "--family", "ap", "--family", "gp", "--sizes", "4,8"}).out == golden("scan_ap_gp.ndjson"));
  CHECK(run({"search", "--n", "4", "--universe", "30", "--seed", "7", "--iterations", "2000", "--restarts", "2",
             "--trace-every", "500"})
            .out == golden("search_seed7.json"));
}
