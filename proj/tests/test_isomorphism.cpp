#include <doctest.h>

#include <numeric>
#include <random>

#include "simplicia/bistellar.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/isomorphism.hpp"
#include "support.hpp"

using namespace simplicia;

namespace {

Complex shuffled(const Complex& c, std::uint64_t seed) {
  std::vector<Vertex> perm(c.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  std::mt19937_64 gen(seed);
  std::shuffle(perm.begin(), perm.end(), gen);
  return relabel(c, perm);
}

bool brute_isomorphic(const Complex& a, const Complex& b) {
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (relabel(a, perm).facets() == b.facets()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_SUITE("isomorphism") {

TEST_CASE("shuffled copies are recognized") {
  std::vector<Complex> cs{cyclic_polytope_boundary(4, 10), cross_polytope(4), stacked_sphere(3, 12, 1)};
  if (auto k = support::fixture("kummer_16.json")) cs.push_back(*k);
  if (auto b = support::fixture("resolution_block.json")) cs.push_back(*b);
  for (const auto& c : cs) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto s = shuffled(c, seed);
      auto m = is_isomorphic(c, s);
      REQUIRE(m.has_value());
      CHECK(is_isomorphism(c, s, *m));
    }
  }
}

TEST_CASE("agrees with exhaustive search on small spheres") {
  // Random 7-vertex 2-spheres via edge flips: some pairs are isomorphic, some are not.
  std::vector<Complex> cs;
  std::mt19937_64 gen(9);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Complex c = stacked_sphere(2, 7, seed);
    for (int t = 0; t < static_cast<int>(seed % 3) * 4; ++t) {
      auto flips = valid_moves(c, 1);
      c = apply_move(c, flips[gen() % flips.size()]);
    }
    cs.push_back(c);
  }
  int yes = 0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      const bool expect = brute_isomorphic(cs[i], cs[j]);
      auto m = is_isomorphic(cs[i], cs[j]);
      CHECK(m.has_value() == expect);
      if (m) CHECK(is_isomorphism(cs[i], cs[j], *m));
      if (expect) ++yes;
    }
  CHECK(yes > 0);
}

TEST_CASE("different complexes are told apart") {
  CHECK_FALSE(is_isomorphic(cyclic_polytope_boundary(4, 8), cross_polytope(4)));
  CHECK_FALSE(is_isomorphic(boundary_simplex(3), boundary_simplex(4)));
  CHECK_FALSE(is_isomorphism(cross_polytope(3), cross_polytope(3), {2, 3, 1, 4, 5, 6}));
}

}  // TEST_SUITE
