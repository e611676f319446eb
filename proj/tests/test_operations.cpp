#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "simplicia/errors.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/operations.hpp"
#include "support.hpp"

using namespace simplicia;
using F = std::vector<std::int64_t>;

TEST_SUITE("operations") {

TEST_CASE("7-vertex torus from a cyclic group") {
  auto c = from_generators({{1, 2, 4}, {1, 3, 4}}, {Permutation::from_cycles(7, {{1, 2, 3, 4, 5, 6, 7}})});
  CHECK(f_vector(c) == F{7, 21, 14});
  CHECK(support::H(c) == "[[0,[]],[2,[]],[1,[]]]");
}

TEST_CASE("generators must be bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), InvalidArgument);
}

TEST_CASE("join cone suspension") {
  CHECK(f_vector(join(boundary_simplex(1), boundary_simplex(1))) == F{4, 4});
  auto cn = cone(boundary_simplex(2));
  CHECK(f_vector(cn) == F{4, 6, 3});
  CHECK(structural_flags(cn).has_boundary);
  auto s = suspension(boundary_simplex(2));
  CHECK(f_vector(s) == F{5, 9, 6});
  CHECK(homology(s) == sphere_homology(2));
  CHECK(to_string(cn.labels().back()) == "4");
}

TEST_CASE("product of two triangles is the 9-vertex torus") {
  auto t = cartesian_product(boundary_simplex(2), boundary_simplex(2));
  CHECK(f_vector(t) == F{9, 27, 18});
  CHECK(support::H(t) == "[[0,[]],[2,[]],[1,[]]]");
  CHECK(to_string(t.labels()[4]) == "(2,2)");
}

TEST_CASE("product of simplices is a ball") {
  auto p = cartesian_product(simplex(1), simplex(2));
  CHECK(p.facet_count() == 3);
  CHECK(homology(p) == HomologyProfile{{{0, {}}, {0, {}}, {0, {}}, {0, {}}}});
}

TEST_CASE("connected sum") {
  auto s = connected_sum(boundary_simplex(3), boundary_simplex(3));
  CHECK(f_vector(s) == F{5, 9, 6});
  auto t = cartesian_product(boundary_simplex(2), boundary_simplex(2));
  auto tt = connected_sum(t, t);
  CHECK(euler_characteristic(tt) == -2);
  CHECK(support::H(tt) == "[[0,[]],[4,[]],[1,[]]]");
  CHECK_THROWS_AS(connected_sum(simplex(2), t), PreconditionError);
}

TEST_CASE("handle addition lowers chi by two") {
  constexpr int m = 8;
  std::vector<std::vector<std::int64_t>> cycle;
  for (int i = 1; i <= m; ++i) cycle.push_back({i, i % m + 1});
  auto cm = from_facets(cycle);
  auto t = cartesian_product(cm, cm);  // grid torus, vertex (u,w) at (u-1)*m + w
  auto dist = [](int a, int b) { return std::min(std::abs(a - b), m - std::abs(a - b)); };
  const Face& f1 = t.facets().front();
  Face far;
  for (const auto& f : t.facets()) {
    bool apart = true;
    for (Vertex u : f1)
      for (Vertex w : f)
        if (dist((u - 1) / m, (w - 1) / m) < 3 && dist((u - 1) % m, (w - 1) % m) < 3) apart = false;
    if (apart) {
      far = f;
      break;
    }
  }
  REQUIRE_FALSE(far.empty());
  auto h = handle_addition(t, f1, far);
  CHECK(euler_characteristic(h) == euler_characteristic(t) - 2);
  CHECK(structural_flags(h).is_pseudomanifold);
  CHECK_THROWS_AS(handle_addition(t, t.facets()[0], t.facets()[1]), InvalidArgument);
}

TEST_CASE("stellar subdivision") {
  auto s = stellar_subdivision(boundary_simplex(3), {1, 2});
  CHECK(f_vector(s) == F{5, 9, 6});
  CHECK(homology(s) == sphere_homology(2));
  CHECK_THROWS_AS(stellar_subdivision(cross_polytope(3), {1, 2}), InvalidArgument);
}

}  // TEST_SUITE
