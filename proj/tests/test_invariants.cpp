#include <doctest.h>

#include <map>

#include "simplicia/errors.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "support.hpp"

using namespace simplicia;
using F = std::vector<std::int64_t>;

TEST_SUITE("invariants") {

TEST_CASE("Kummer f-vector projects to the transcript H and G") {
  const F f{16, 120, 400, 480, 192};
  auto hg = hg_vectors_from_f(f);
  CHECK(hg.h_transcript() == F{11, 66, 126, -19, 7});
  CHECK(hg.g_transcript() == F{10, 55, 60});
  CHECK(hg.h.front() == 1);
  CHECK(hg.h.size() == 6);
}

TEST_CASE("h-vectors of small spheres") {
  CHECK(hg_vectors(boundary_simplex(4)).h == F{1, 1, 1, 1, 1});
  CHECK(hg_vectors(cross_polytope(3)).h == F{1, 3, 3, 1});
  CHECK(hg_vectors(cross_polytope(3)).g == F{1, 2, 0, -2});
  // Dehn-Sommerville on simplicial spheres.
  for (const auto& c : {cyclic_polytope_boundary(4, 10), cyclic_polytope_boundary(5, 9), stacked_sphere(4, 11, 3)}) {
    auto h = hg_vectors(c).h;
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == h[h.size() - 1 - i]);
  }
  CHECK_THROWS_AS(hg_vectors(from_facets({{1, 2, 3}, {3, 4}})), PreconditionError);
}

TEST_CASE("orientability") {
  CHECK(orientability(cyclic_polytope_boundary(4, 10)).orientable);
  if (auto c = support::fixture("rp2_6.json")) CHECK_FALSE(orientability(*c).orientable);
  if (auto c = support::fixture("kummer_16.json")) CHECK(orientability(*c).orientable);
  CHECK_THROWS_AS(orientability(from_facets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})), PreconditionError);
}

TEST_CASE("orientation signs are coherent across every ridge") {
  auto c = cyclic_polytope_boundary(4, 9);
  auto o = orientability(c);
  REQUIRE(o.signs.has_value());
  // Induced orientation of a ridge: sign * (-1)^position of the dropped vertex.
  std::map<Face, int> sum;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    const Face& f = c.facets()[i];
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face r;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) r.push_back(f[t]);
      sum[r] += (*o.signs)[i] * (skip % 2 ? -1 : 1);
    }
  }
  for (const auto& [r, s] : sum) CHECK(s == 0);
}

TEST_CASE("closed pseudomanifolds: orientable iff top homology is Z") {
  for (const char* file : {"rp2_6.json", "torus_9.json", "rp3_11.json", "kummer_16.json", "bd_cross_4.json"}) {
    auto c = support::fixture(file);
    if (!c) continue;
    auto h = homology(*c);
    CHECK(orientability(*c).orientable == (h[h.size() - 1] == HomologyGroup{1, {}}));
  }
}

TEST_CASE("edge-path presentations") {
  auto tri = fundamental_group_presentation(boundary_simplex(2));
  CHECK(tri.generator_count == 1);
  CHECK(tri.relators.empty());
  CHECK(abelianization(tri) == HomologyGroup{1, {}});

  auto sph = fundamental_group_presentation(boundary_simplex(3));
  CHECK(sph.generator_count == 3);
  CHECK(sph.relators.size() == 4);
  CHECK(abelianization(sph) == HomologyGroup{0, {}});

  if (auto c = support::fixture("rp2_6.json")) CHECK(abelianization(fundamental_group_presentation(*c)) == HomologyGroup{0, {2}});
  CHECK_THROWS_AS(fundamental_group_presentation(from_facets({{1, 2}, {3, 4}})), PreconditionError);
}

TEST_CASE("Kummer vertex link has 61 generators") {
  auto k = support::fixture("kummer_16.json");
  if (!k) return;
  auto lk = link(*k, {1});
  CHECK(f_vector(lk)[1] == 75);
  auto p = fundamental_group_presentation(lk);
  CHECK(p.generator_count == 75 - (lk.vertex_count() - 1));
  CHECK(p.generator_count == 61);
  CHECK(abelianization(p) == HomologyGroup{0, {2}});
}

TEST_CASE("abelianization rejects unknown generators") {
  GroupPresentation p;
  p.generator_count = 1;
  p.relators = {{2}};
  CHECK_THROWS_AS(abelianization(p), InvalidArgument);
}

}  // TEST_SUITE
