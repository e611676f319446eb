#include <doctest.h>

#include <set>

#include "simplicia/bistellar.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "support.hpp"

using namespace simplicia;

namespace {

// Straight from the definition: a is a face whose link is the boundary of a
// simplex b on d+2-|a| vertices, and b itself is not a face.
std::vector<Move> brute_moves(const Complex& c) {
  const int d = c.dim();
  std::vector<Move> out;
  for (int k = 0; k <= d; ++k) {
    for (const auto& a : faces(c, k)) {
      if (k == d) {
        out.push_back({a, {c.vertex_count() + 1}, std::nullopt});
        continue;
      }
      auto lk = link_facets(c, a);
      std::set<Vertex> vs;
      for (const auto& g : lk) vs.insert(g.begin(), g.end());
      Face b(vs.begin(), vs.end());
      if (static_cast<int>(b.size()) != d + 1 - k) continue;
      std::set<Face> want;
      for (std::size_t skip = 0; skip < b.size(); ++skip) {
        Face r;
        for (std::size_t t = 0; t < b.size(); ++t)
          if (t != skip) r.push_back(b[t]);
        want.insert(r);
      }
      if (std::set<Face>(lk.begin(), lk.end()) != want) continue;
      if (c.contains_face(b)) continue;
      out.push_back({a, b, std::nullopt});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string invariants(const Complex& c) {
  return format_homology(homology(c)) + " chi=" + std::to_string(euler_characteristic(c)) +
         " or=" + std::to_string(orientability(c).orientable);
}

}  // namespace

TEST_SUITE("bistellar") {

TEST_CASE("valid moves agree with the definition") {
  std::vector<Complex> cs{cross_polytope(3), boundary_simplex(4), cyclic_polytope_boundary(4, 7),
                          cross_polytope(4), stacked_sphere(3, 8, 5)};
  if (auto t = support::fixture("torus_9.json")) cs.push_back(*t);
  if (auto r = support::fixture("rp3_11.json")) cs.push_back(*r);
  for (const auto& c : cs) {
    CAPTURE(c.name());
    CHECK(valid_moves(c) == brute_moves(c));
  }
}

TEST_CASE("octahedron has 12 edge flips and 8 facet moves") {
  auto oct = cross_polytope(3);
  CHECK(valid_moves(oct, 1).size() == 12);
  CHECK(valid_moves(oct, 2).size() == 8);
  CHECK(valid_moves(oct, 0).empty());
}

TEST_CASE("f-vector deltas") {
  auto c = cyclic_polytope_boundary(4, 8);
  for (const auto& m : valid_moves(c)) {
    auto before = f_vector(c);
    auto after = f_vector(apply_move(c, m));
    auto delta = move_f_delta(c.dim(), m.a.size(), m.b.size());
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(after[k] - before[k] == delta[k]);
  }
}

TEST_CASE("moves are involutions, bit for bit") {
  for (const auto& c : {cross_polytope(3), boundary_simplex(4), cyclic_polytope_boundary(4, 8)}) {
    for (const auto& m : valid_moves(c)) {
      Complex after = apply_move(c, m);
      Complex back = apply_move(after, reverse_move(c, m));
      CHECK(back == c);
    }
  }
}

TEST_CASE("vertex removal and its reverse restore labels") {
  auto c = from_facets({{10, 20, 30}, {10, 20, 40}, {10, 30, 40}, {20, 30, 50}, {20, 40, 50}, {30, 40, 50}});
  // Vertex 50 (index 5) has link the triangle 20-30-40.
  Move m{{5}, {2, 3, 4}, std::nullopt};
  REQUIRE(is_valid_move(c, m));
  auto after = apply_move(c, m);
  CHECK(after.vertex_count() == 4);
  auto back = apply_move(after, reverse_move(c, m));
  CHECK(back == c);
  CHECK(to_string(back.labels()[4]) == "50");
}

TEST_CASE("facet moves insert the new vertex") {
  auto c = boundary_simplex(2);
  auto after = apply_move(c, {{1, 2}, {4}, std::nullopt});
  CHECK(f_vector(after) == std::vector<std::int64_t>{4, 4});
  CHECK(to_string(after.labels()[3]) == "4");
  auto mid = apply_move(c, {{1, 2}, {2}, Label{std::string("x")}});
  CHECK(to_string(mid.labels()[1]) == "x");
}

TEST_CASE("invalid moves are rejected") {
  auto oct = cross_polytope(3);
  CHECK_THROWS_AS(apply_move(oct, {{1, 2}, {3, 4}, std::nullopt}), MoveNotApplicable);
  CHECK_THROWS_AS(apply_move(oct, {{1}, {3, 5}, std::nullopt}), MoveNotApplicable);
  CHECK_FALSE(is_valid_move(oct, {{1, 3}, {2, 5}, std::nullopt}));
}

TEST_CASE("random move sequences keep invariants and replay exactly") {
  for (const auto& c : {boundary_simplex(4), cross_polytope(3)}) {
    const std::string want = invariants(c);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto r = randomize(c, 30, seed);
      CHECK(r.applied == 30);
      Complex cur = c;
      for (const auto& m : r.moves) {
        Complex next = apply_move(cur, m);
        CHECK(invariants(next) == want);
        CHECK(apply_move(next, reverse_move(cur, m)) == cur);
        cur = next;
      }
      CHECK(cur == r.complex);
      CHECK(replay(c, r.moves) == r.complex);
      CHECK(randomize(c, 30, seed).moves == r.moves);
    }
  }
}

TEST_CASE("move json") {
  Move m{{1, 2}, {3, 4}, Label{std::int64_t{9}}};
  nlohmann::json j = m;
  CHECK(j.dump() == R"({"a":[1,2],"b":[3,4],"label":9})");
  CHECK(j.get<Move>() == m);
}

}  // TEST_SUITE
