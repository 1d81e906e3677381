#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dalli/cli.hpp"
#include "dalli/dimacs.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using dalli::run_command;

namespace {

const std::string kData = DALLI_TEST_DATA;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dalli-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("solve the nine-vertex fixture") {
  const Run r = run({"solve", kData + "/hub9.dimacs", "--algo", "lowdeg"});
  REQUIRE(r.code == dalli::kExitOk);
  const json j = r.body();
  CHECK(j["algorithm"] == "lowdeg");
  CHECK(j["instance"] == "hub9");
  CHECK(j["n"] == 9);
  CHECK(j["m"] == 15);
  CHECK(j["size"] == 2);
  CHECK(j["valid"] == true);
  CHECK(j["witness"].size() == 2);
  CHECK(j.contains("wall_time_ms"));

  for (const char* algo : {"brute", "ilp", "auto"}) {
    const Run o = run({"solve", kData + "/hub9.dimacs", "--algo", algo, "--oracle"});
    REQUIRE(o.code == dalli::kExitOk);
    CHECK(o.body()["size"] == 2);
    CHECK(o.body()["oracle"] == "brute");
    CHECK(o.body()["match"] == true);
  }
  CHECK(run({"solve", kData + "/hub9.dimacs"}).body()["params"]["dispatch"] == "lowdeg");
}

TEST_CASE("verify reports violations") {
  const Run ok = run({"verify", kData + "/hub9.dimacs", "5,6,7"});
  REQUIRE(ok.code == dalli::kExitOk);
  CHECK(ok.body()["valid"] == true);
  CHECK(ok.body()["members"] == json::array({5, 6, 7}));

  const Run bad = run({"verify", kData + "/hub9.dimacs", "5"});
  REQUIRE(bad.code == dalli::kExitOk);
  CHECK(bad.body()["valid"] == false);
  CHECK(bad.body()["violations"][0]["vertex"] == 5);
  CHECK(bad.body()["violations"][0]["inside"] == 1);
  CHECK(bad.body()["violations"][0]["required"] == 3);

  const fs::path dir = scratch("verify");
  write(dir / "set.txt", "5\n6 7\n");
  CHECK(run({"verify", kData + "/hub9.dimacs", (dir / "set.txt").string()}).body()["valid"] == true);
}

TEST_CASE("params on the fixtures") {
  const Run r = run({"params", kData + "/cubic6.dimacs"});
  REQUIRE(r.code == dalli::kExitOk);
  const json j = r.body();
  CHECK(j["max_degree"] == 3);
  CHECK(j["connected"] == true);
  CHECK(j["girth"] == 3);
  CHECK(j["forbidden"].empty());
}

TEST_CASE("reduce then extract") {
  const fs::path dir = scratch("reduce");
  const Run r = run({"reduce", kData + "/cubic6.dimacs", "--k", "2", "--emit", (dir / "target.dimacs").string()});
  REQUIRE(r.code == dalli::kExitOk);
  const json j = r.body();
  CHECK(j["k_prime"] == 40);
  CHECK(j["source_n"] == 6);
  CHECK(j["target_n"] == 45 * 6);
  CHECK(j["forbidden_count"] == 32 * 6);
  CHECK(j["max_degree"] == 6);
  write(dir / "instance.json", r.out);

  std::ifstream target_in(dir / "target.dimacs");
  std::stringstream target_text;
  target_text << target_in.rdbuf();
  const dalli::Graph target = dalli::parse_dimacs(target_text.str());
  CHECK(target.vertex_count() == 270);

  // Copy-0 triangles everywhere, all copies of source vertices 2 and 5, and
  // selectors of the rest.
  std::vector<int> alliance;
  for (int i = 0; i < 6; ++i) {
    const json& m = j["vertex_map"][i];
    alliance.insert(alliance.end(), {m["v"][0].get<int>(), m["u"][0].get<int>(), m["w"][0].get<int>()});
    if (i == 1 || i == 4) {
      for (int c = 1; c <= 3; ++c) {
        alliance.insert(alliance.end(), {m["v"][c].get<int>(), m["u"][c].get<int>(), m["w"][c].get<int>()});
      }
    } else {
      alliance.push_back(m["s"].get<int>());
    }
  }
  std::string list;
  for (int a : alliance) list += (list.empty() ? "" : ",") + std::to_string(a);
  CHECK(alliance.size() == 40);

  const Run v = run({"verify", (dir / "target.dimacs").string(), list});
  CHECK(v.body()["valid"] == true);

  const Run e = run({"extract", (dir / "instance.json").string(), list});
  REQUIRE(e.code == dalli::kExitOk);
  CHECK(e.body()["dominating_set"] == json::array({2, 5}));
  CHECK(e.body()["dominates"] == true);

  CHECK(run({"extract", (dir / "instance.json").string(), "1"}).code == dalli::kExitInvalidInput);
  CHECK(run({"reduce", kData + "/hub9.dimacs", "--k", "2"}).code == dalli::kExitInvalidInput);
}

TEST_CASE("gen is deterministic per seed") {
  const Run a = run({"gen", "cubic:n=10", "--seed", "4"});
  const Run b = run({"gen", "cubic:n=10", "--seed", "4"});
  REQUIRE(a.code == dalli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(dalli::parse_dimacs(a.out).max_degree() == 3);

  const fs::path dir = scratch("gen");
  const Run c = run({"gen", "degcap:n=12", "--seed", "4", "--out", (dir / "g.dimacs").string()});
  REQUIRE(c.code == dalli::kExitOk);
  CHECK(c.body()["n"] == 12);
  CHECK(c.body()["spec"] == "degcap:n=12,dmax=5,extra=-1");
  CHECK(fs::exists(dir / "g.dimacs"));
  CHECK(run({"gen", "cubic:n=7"}).code == dalli::kExitInvalidInput);
}

TEST_CASE("bench writes records and is reproducible") {
  const fs::path dir = scratch("bench");
  const fs::path corpus = dir / "corpus";
  fs::create_directories(corpus);
  for (int s = 0; s < 3; ++s) {
    run({"gen", "twincover:t=2,cliques=3,zmax=3", "--seed", std::to_string(s), "--out",
         (corpus / ("tc" + std::to_string(s) + ".dimacs")).string()});
    run({"gen", "clique:c=6,k=2", "--seed", std::to_string(s), "--out",
         (corpus / ("cp" + std::to_string(s) + ".dimacs")).string()});
  }
  const std::vector<std::string> args{"bench", corpus.string(), "--algo", "dtc,twincover,ilp", "--oracle",
                                      "--counterexample-dir", (dir / "cx").string()};
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.code == dalli::kExitOk);
  json a = first.body();
  json b = second.body();
  REQUIRE(a.size() == 18);
  for (auto* records : {&a, &b}) {
    for (auto& rec : *records) rec.erase("wall_time_ms");
  }
  CHECK(a == b);
  CHECK(a[0]["instance"] == "cp0");
  for (const auto& rec : a) {
    if (rec.contains("error")) continue;  // e.g. a twin cover above the threshold
    CHECK(rec["match"] == true);
  }
  CHECK_FALSE(fs::exists(dir / "cx"));
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == dalli::kExitInvalidInput);
  CHECK(run({"solve", "/nonexistent.dimacs"}).code == dalli::kExitInvalidInput);
  CHECK(run({"solve", kData + "/hub9.dimacs", "--algo", "magic"}).code == dalli::kExitInvalidInput);
  const fs::path dir = scratch("codes");
  write(dir / "broken.dimacs", "p edge 3 1\ne 1 1\n");
  const Run r = run({"solve", (dir / "broken.dimacs").string()});
  CHECK(r.code == dalli::kExitInvalidInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"verify", kData + "/hub9.dimacs", "10"}).code == dalli::kExitInvalidInput);
  CHECK(run({"--help"}).code == dalli::kExitOk);
}

TEST_CASE("installed binary matches the in-process entry point") {
  const fs::path dir = scratch("binary");
  const std::string cmd = std::string(DALLI_BINARY) + " solve " + kData + "/cubic6.dimacs --algo brute > " +
                          (dir / "out.json").string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(dir / "out.json");
  json via_process = json::parse(in);
  json in_process = run({"solve", kData + "/cubic6.dimacs", "--algo", "brute"}).body();
  via_process.erase("wall_time_ms");
  in_process.erase("wall_time_ms");
  CHECK(via_process == in_process);
}
