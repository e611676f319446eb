#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "simplicia/store.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

fs::path workdir() {
  static fs::path d = [] {
    auto p = fs::temp_directory_path() / "simplicia_cli_tests";
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const auto out = workdir() / "stdout.txt";
  const auto err = workdir() / "stderr.txt";
  const std::string cmd = "cd '" + workdir().string() + "' && '" SIMPLICIA_CLI "' " + args + " >'" + out.string() +
                          "' 2>'" + err.string() + "'";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("construct then info") {
  auto c = run("construct cyclic -d 4 -n 10 -o c.json");
  REQUIRE(c.status == 0);
  auto i = run("info c.json");
  CHECK(i.status == 0);
  CHECK(contains(i.out, "F=[10,45,70,35]\n"));
  CHECK(contains(i.out, "Chi=0\n"));
  CHECK(contains(i.out, "Homology=[[0,[]],[0,[]],[0,[]],[1,[]]]\n"));
  CHECK(contains(i.out, "IsStronglyConnected=true\n"));
  CHECK(i.err.empty());

  auto j = nlohmann::json::parse(run("info c.json --json").out);
  CHECK(j.at("f_vector") == nlohmann::json::array({10, 45, 70, 35}));
  CHECK(j.at("flags").at("has_boundary") == false);
}

TEST_CASE("homology and flags") {
  REQUIRE(run("construct cross -d 3 -o oct.json").status == 0);
  CHECK(run("homology oct.json").out == "Homology=[[0,[]],[0,[]],[1,[]]]\n");
  CHECK(contains(run("flags oct.json").out, "IsPM=true"));
  CHECK(nlohmann::json::parse(run("flags oct.json --json").out).at("is_pure") == true);
}

TEST_CASE("slice and triangulate") {
  REQUIRE(run("construct cyclic -d 4 -n 10 -o c.json").status == 0);
  auto s = run("slice c.json --sides 1,3,5,7,9/2,4,6,8,10 -o ns.json");
  CHECK(s.status == 0);
  CHECK(contains(s.out, "F=[25,70,0,35]"));
  CHECK(contains(s.out, "(T^2)#6"));
  auto t = run("nstriangulate ns.json -o tri.json");
  CHECK(t.status == 0);
  CHECK(contains(t.out, "F=[25,105,70]"));
  CHECK(contains(t.out, "[12,[]]"));
}

TEST_CASE("reduce is deterministic and logs moves") {
  REQUIRE(run("construct cyclic -d 4 -n 9 -o c9.json").status == 0);
  REQUIRE(run("reduce c9.json --seed 7 -o r1.json").status == 0);
  REQUIRE(run("reduce c9.json --seed 7 -o r2.json").status == 0);
  CHECK(slurp(workdir() / "r1.json") == slurp(workdir() / "r2.json"));
  auto d = simplicia::load(workdir() / "r1.json");
  CHECK(d.move_log.has_value());
  CHECK(d.complex.vertex_count() == 5);
}

TEST_CASE("equivalence") {
  REQUIRE(run("construct cyclic -d 4 -n 8 -o c8.json").status == 0);
  REQUIRE(run("construct bdsimplex -d 4 -o s4.json").status == 0);
  REQUIRE(run("construct bdsimplex -d 3 -o s3.json").status == 0);
  CHECK(contains(run("equivalent c8.json s4.json").out, "bistellarly equivalent"));
  auto no = run("equivalent s3.json s4.json");
  CHECK(no.status == 0);
  CHECK(contains(no.out, "not established (dimension)"));
}

TEST_CASE("library search") {
  auto k = run("lib search Kummer");
  CHECK(k.status == 0);
  CHECK(contains(k.out, "Kummer variety"));
  CHECK(contains(run("lib search 'chi == 8'").out, "kummer_16.json"));
  auto bad = run("lib search 'dim === 4'");
  CHECK(bad.status != 0);
  CHECK(contains(bad.err, "predicate :="));
  CHECK(bad.out.empty());
  CHECK(run("lib search zzz-nonexistent").out.empty());
}

TEST_CASE("library override through the environment") {
  auto lib = workdir() / "lib";
  fs::create_directories(lib);
  REQUIRE(run("construct bdsimplex -d 2 -o lib/tri.json").status == 0);
  std::ofstream(lib / "index.json")
      << R"({"schema_version": 1, "entries": [{"name": "only triangle", "file": "tri.json", "topological_type": "S^1", "provenance": "test"}]})";
  auto r = run("lib list");
  CHECK_FALSE(contains(r.out, "only triangle"));
  ::setenv("SIMPLICIA_LIB", lib.c_str(), 1);
  r = run("lib list");
  ::unsetenv("SIMPLICIA_LIB");
  CHECK(r.out == "only triangle\tS^1\ttri.json\n");
}

TEST_CASE("export") {
  REQUIRE(run("construct bdsimplex -d 3 -o s3.json").status == 0);
  auto t = run("export s3.json --format topaz");
  CHECK(contains(t.out, "FACETS\n{0 1 2}\n{0 1 3}\n{0 2 3}\n{1 2 3}\n"));
  CHECK(contains(run("export s3.json --format latex").out, "longtable"));
  CHECK(run("export s3.json --format xml").status != 0);
}

TEST_CASE("link and library references") {
  auto l = run("link lib:Kummer --vertex 1 -o lk.json");
  if (l.status != 0) {
    MESSAGE("Kummer fixture unavailable: " << l.err);
    return;
  }
  CHECK(contains(l.out, "F=[15,75,120,60]"));
  CHECK(contains(run("equivalent lk.json lib:RP^3").out, "bistellarly equivalent"));
}

TEST_CASE("errors go to stderr with a nonzero status") {
  auto missing = run("info nowhere.json");
  CHECK(missing.status == 1);
  CHECK(missing.out.empty());
  CHECK(contains(missing.err, "nowhere.json"));

  std::ofstream(workdir() / "broken.json") << "{\"schema_version\": 1, \"name\": \"x\",\n \"labels\": [1,2";
  auto broken = run("info broken.json");
  CHECK(broken.status == 1);
  CHECK(contains(broken.err, "line 2"));

  CHECK(run("construct cyclic -d 4 -o x.json").status != 0);
  CHECK(run("bogus").status != 0);
  REQUIRE(run("construct bdsimplex -d 3 -o s3.json").status == 0);
  auto b = run("blowup s3.json --vertex 1 -o out.json");
  CHECK(b.status == 1);
  CHECK(contains(b.err, "4-pseudomanifold"));
  auto sl = run("slice s3.json --sides 1/2,3,4");
  CHECK(sl.status == 1);
  CHECK(contains(sl.err, "only 3-manifold slicings supported"));
}
