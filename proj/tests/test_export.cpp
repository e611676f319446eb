#include <doctest.h>

#include <sstream>

#include "simplicia/errors.hpp"
#include "simplicia/export.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/isomorphism.hpp"

using namespace simplicia;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("export") {

TEST_CASE("topaz facets are zero based") {
  auto t = export_topaz(boundary_simplex(3));
  CHECK(t.find("FACETS\n{0 1 2}\n{0 1 3}\n{0 2 3}\n{1 2 3}\n") != std::string::npos);
  CHECK(count(t, "{") == 4);
}

TEST_CASE("topaz round trip") {
  for (const auto& c : {cyclic_polytope_boundary(4, 10), cross_polytope(3)}) {
    auto back = import_topaz(export_topaz(c));
    CHECK(is_isomorphic(back, c).has_value());
    CHECK(back.labels() == c.labels());
  }
  CHECK_THROWS_AS(import_topaz("FACETS\n{0 x}\n"), ParseError);
  CHECK_THROWS_AS(import_topaz("nothing here\n"), ParseError);
}

TEST_CASE("latex has one row per facet and a summary") {
  auto t = export_latex(cyclic_polytope_boundary(4, 10));
  CHECK(count(t, "\\rangle$") == 35);
  CHECK(t.find("longtable") != std::string::npos);
  CHECK(t.find("35") != std::string::npos);
  CHECK(t.find("$\\chi$") != std::string::npos);
}

}  // TEST_SUITE
