#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "simplicia/bistellar.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/store.hpp"
#include "support.hpp"

using namespace simplicia;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("simplicia_store_" + name); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_SUITE("store") {

TEST_CASE("round trip keeps facets labels and cache") {
  auto c = cyclic_polytope_boundary(4, 10);
  f_vector(c);
  homology(c);
  structural_flags(c);
  auto p = scratch("c410.json");
  save(c, p);
  auto d = load(p);
  CHECK(d.complex == c);
  CHECK(d.complex.name() == c.name());
  CHECK(d.complex.cache().snapshot() == c.cache().snapshot());
  CHECK(d.complex.cache().get("f_vector")->dump() == "[10,45,70,35]");
  CHECK(dump_document(d.complex) == slurp(p));
  CHECK_FALSE(d.move_log.has_value());
}

TEST_CASE("text and string labels survive") {
  std::vector<std::vector<std::int64_t>> raw{{1, 2, 3}, {2, 3, 4}};
  auto c = from_facets(raw, std::vector<Label>{std::string("a"), std::int64_t{-4}, std::string("u-w"), std::string("\xc3\xa9")});
  auto d = parse_document(dump_document(c));
  CHECK(d.complex == c);
}

TEST_CASE("move logs round trip") {
  auto r = randomize(boundary_simplex(4), 10, 2);
  auto d = parse_document(dump_document(r.complex, r.moves));
  REQUIRE(d.move_log.has_value());
  CHECK(*d.move_log == r.moves);
  CHECK(replay(boundary_simplex(4), *d.move_log) == d.complex);
}

TEST_CASE("strict loading recomputes caches") {
  auto c = cyclic_polytope_boundary(4, 7);
  f_vector(c);
  homology(c);
  orientability(c);
  const std::string text = dump_document(c);
  CHECK_NOTHROW(parse_document(text, true));
  const std::string bad = replace(text, "\"f_vector\": [7,", "\"f_vector\": [8,");
  CHECK_NOTHROW(parse_document(bad, false));
  CHECK_THROWS_AS(parse_document(bad, true), CacheMismatch);
}

TEST_CASE("malformed documents name the problem") {
  const std::string good = dump_document(boundary_simplex(2));
  auto where = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where(good.substr(0, good.size() / 2)).rfind("line ", 0) == 0);
  CHECK(where(replace(good, "\"name\"", "\"nmae\"")) == "nmae");
  CHECK(where(replace(good, "[1,2]", "[2,1]")) == "facets[0]");
  CHECK(where(replace(good, "[1,2]", "[1,9]")) == "facets[0][1]");
  CHECK(where(replace(good, "[1,2]", "[1,2,3]")).rfind("facets", 0) == 0);
  CHECK(where(good + "x").rfind("line ", 0) == 0);
  CHECK(where(replace(good, "\"cached_properties\": {}", "\"cached_properties\": {\"bogus\": 1}")) == "no error");
  CHECK_THROWS_AS(parse_document(replace(good, "\"cached_properties\": {}", "\"cached_properties\": {\"bogus\": 1}"), true),
                  ParseError);
  CHECK_THROWS_AS(parse_document(replace(good, "\"schema_version\": 1", "\"schema_version\": 2")), SchemaVersionError);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(load(scratch("does_not_exist.json")), Error);
}

TEST_CASE("every fixture is byte stable") {
  if (!fs::exists(support::fixture_dir())) return;
  for (const auto& e : fs::directory_iterator(support::fixture_dir())) {
    if (e.path().filename() == "index.json") continue;
    CAPTURE(e.path().string());
    auto d = load(e.path(), true);
    CHECK(dump_document(d.complex, d.move_log) == slurp(e.path()));
  }
}

}  // TEST_SUITE
