#include <doctest.h>

#include "simplicia/bistellar.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/isomorphism.hpp"
#include "simplicia/operations.hpp"
#include "simplicia/reduction.hpp"
#include "support.hpp"

using namespace simplicia;

TEST_SUITE("reduction") {

TEST_CASE("cyclic 3-sphere reduces to the boundary of the 4-simplex") {
  auto c = cyclic_polytope_boundary(4, 10);
  auto r = reduce(c);
  CHECK(r.converged);
  CHECK(r.complex.vertex_count() == 5);
  CHECK(replay(c, r.moves) == r.complex);
}

TEST_CASE("randomized spheres come back") {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto r = reduce(randomize(boundary_simplex(4), 50, seed).complex, {.seed = seed});
    if (r.converged && is_isomorphic(r.complex, boundary_simplex(4))) ++ok;
  }
  CHECK(ok >= 9);
}

TEST_CASE("reduction is deterministic in the seed") {
  auto c = randomize(cross_polytope(4), 40, 3).complex;
  auto a = reduce(c, {.seed = 5});
  auto b = reduce(c, {.seed = 5});
  CHECK(a.moves == b.moves);
  CHECK(a.complex == b.complex);
}

TEST_CASE("target f-vector stops early") {
  auto c = cyclic_polytope_boundary(4, 10);
  auto full = reduce(c);
  REQUIRE(full.moves.size() > 4);
  const std::vector<Move> head(full.moves.begin(), full.moves.begin() + 4);
  ReductionOptions o;
  o.target_f = f_vector(replay(c, head));
  auto r = reduce(c, o);
  CHECK(r.converged);
  CHECK(f_vector(r.complex) == *o.target_f);
  CHECK(r.moves.size() <= head.size());
}

TEST_CASE("reversed f order") {
  CHECK(reversed_f_less({6, 15, 18, 9}, {5, 15, 20, 10}));
  CHECK_FALSE(reversed_f_less({5, 10, 10, 5}, {5, 10, 10, 5}));
}

TEST_CASE("bistellar equivalence") {
  auto a = randomize(cross_polytope(4), 30, 1).complex;
  auto r = bistellarly_equivalent(a, cyclic_polytope_boundary(4, 9));
  CHECK(r.established);

  auto dim = bistellarly_equivalent(boundary_simplex(3), boundary_simplex(4));
  CHECK_FALSE(dim.established);
  CHECK(dim.reason == "dimension");

  if (auto t = support::fixture("torus_9.json")) {
    auto h = bistellarly_equivalent(*t, cross_polytope(3));
    CHECK_FALSE(h.established);
    CHECK(h.reason == "homology");
  }
}

TEST_CASE("RP3 fixture and the Kummer vertex link") {
  auto k = support::fixture("kummer_16.json");
  auto rp3 = support::fixture("rp3_11.json");
  if (!k || !rp3) return;
  CHECK(bistellarly_equivalent(link(*k, {1}), *rp3).established);
}

TEST_CASE("manifold recognition") {
  CHECK(is_combinatorial_manifold(cyclic_polytope_boundary(4, 9)) == ManifoldStatus::manifold);
  CHECK(is_combinatorial_manifold(simplex(3)) == ManifoldStatus::manifold);
  CHECK(is_combinatorial_manifold(cone(cross_polytope(4))) == ManifoldStatus::manifold);
  if (auto t = support::fixture("torus_9.json")) {
    CHECK(is_combinatorial_manifold(*t) == ManifoldStatus::manifold);
    CHECK(is_combinatorial_manifold(cone(*t)) == ManifoldStatus::not_manifold);
  }
  // Two tetrahedron boundaries sharing a vertex.
  auto pinch = from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {5, 6, 7}});
  CHECK(is_combinatorial_manifold(pinch) == ManifoldStatus::not_manifold);
  if (auto k = support::fixture("kummer_16.json")) {
    CHECK(vertex_link_status(*k, 1) == ManifoldStatus::not_manifold);
    CHECK(is_combinatorial_manifold(*k) == ManifoldStatus::not_manifold);
  }
  CHECK(std::string(to_string(ManifoldStatus::unknown)) == "unknown");
}

}  // TEST_SUITE
