#include <doctest.h>

#include "simplicia/blowup.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/reduction.hpp"
#include "support.hpp"

using namespace simplicia;

TEST_SUITE("blowup") {

TEST_CASE("resolution block fixture") {
  auto b = support::fixture("resolution_block.json");
  if (!b) return;
  ResolutionBlock rb{*b, "RP^3", "fixture"};
  CHECK_NOTHROW(validate_block(rb));
  CHECK(homology(boundary(*b)) == rp3_homology());
  CHECK(homology(*b)[2].betti == 1);
  CHECK_THROWS_AS(validate_block({boundary_simplex(5), "RP^3", ""}), PreconditionError);
}

TEST_CASE("every vertex link of the block is a sphere or a ball") {
  auto b = support::fixture("resolution_block.json");
  if (!b) return;
  for (Vertex v = 1; v <= b->vertex_count(); ++v) {
    CAPTURE(v);
    CHECK(vertex_link_status(*b, v) == ManifoldStatus::manifold);
  }
}

TEST_CASE("Kummer vertices are ordinary double points") {
  auto k = support::fixture("kummer_16.json");
  auto rp3 = support::fixture("rp3_11.json");
  if (!k || !rp3) return;
  CHECK(is_ordinary_double_point(*k, 1, *rp3));
  auto s = singular_vertices(*k);
  CHECK(s.size() == 16);
  for (const auto& x : s) CHECK(x.link_homology == rp3_homology());
}

TEST_CASE("blowup refuses non-ODP input") {
  auto b = support::fixture("resolution_block.json");
  if (!b) return;
  ResolutionBlock rb{*b, "RP^3", "fixture"};
  CHECK_THROWS_AS(blowup(boundary_simplex(5), 1, rb), UnsupportedSingularity);
  CHECK_THROWS_AS(blowup(boundary_simplex(4), 1, rb), PreconditionError);
  CHECK_THROWS_AS(blowup(boundary_simplex(5), 9, rb), InvalidArgument);
  CHECK(singular_vertices(cross_polytope(5)).empty());
}

}  // TEST_SUITE
