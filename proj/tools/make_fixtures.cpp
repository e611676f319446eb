// Regenerates the curated fixture library (data/library) from scratch.

#include <algorithm>
#include <array>
#include <deque>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "simplicia/blowup.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/operations.hpp"
#include "simplicia/reduction.hpp"
#include "simplicia/store.hpp"

using namespace simplicia;
namespace fs = std::filesystem;

namespace {

// Kuhn triangulation of the 4-torus R^4/2Z^4 on the 16 points {0,1}^4; the
// involution x -> -x fixes every vertex and identifies simplices in pairs,
// so the quotient facets are the distinct vertex sets.
Complex kummer() {
  std::set<std::vector<std::int64_t>> facets;
  std::array<int, 4> perm{0, 1, 2, 3};
  for (int x = 0; x < 16; ++x) {
    do {
      std::vector<std::int64_t> f{x + 1};
      int p = x;
      for (int axis : perm) {
        p ^= 1 << axis;
        f.push_back(p + 1);
      }
      std::sort(f.begin(), f.end());
      facets.insert(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(perm.begin(), perm.end());
  }
  std::vector<std::vector<std::int64_t>> raw(facets.begin(), facets.end());
  return from_facets(raw).with_name("Kummer variety (16 vertices)");
}

// Regular neighbourhood of the diagonal in S^2 x S^2, i.e. the disk bundle of
// TS^2 (boundary RP^3, b_2 = 1): subdivide every edge joining the diagonal
// to the rest and take the full subcomplex on the diagonal and the midpoints.
Complex resolution_block() {
  const Complex s2 = boundary_simplex(3);
  Complex p = cartesian_product(s2, s2);
  const int n = s2.vertex_count();
  std::set<Vertex> diagonal;
  for (int u = 1; u <= n; ++u) diagonal.insert((u - 1) * n + u);
  std::vector<Face> mixed;
  for (const auto& e : faces(p, 1))
    if (diagonal.count(e[0]) != diagonal.count(e[1])) mixed.push_back(e);
  const int before = p.vertex_count();
  for (const auto& e : mixed) p = stellar_subdivision(p, e);
  std::vector<Vertex> keep(diagonal.begin(), diagonal.end());
  for (int v = before + 1; v <= p.vertex_count(); ++v) keep.push_back(v);
  std::sort(keep.begin(), keep.end());
  auto facets = induced_facets(p, keep);
  return subcomplex_from_faces(p, facets, "Resolution block D(TS^2)");
}

// Icosahedron boundary modulo the antipodal map.
Complex rp2_6() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<std::array<int, 3>> tri;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    tri.push_back({0, u, u1});
    tri.push_back({u, u1, l});
    tri.push_back({u1, l, l1});
    tri.push_back({11, l, l1});
  }
  std::vector<std::set<int>> adj(12);
  for (const auto& t : tri)
    for (int a : t)
      for (int b : t)
        if (a != b) adj[a].insert(b);
  std::vector<int> antipode(12);
  for (int s = 0; s < 12; ++s) {
    std::vector<int> dist(12, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (dist[y] < 0) dist[y] = dist[x] + 1, q.push_back(y);
    }
    antipode[s] = static_cast<int>(std::find(dist.begin(), dist.end(), 3) - dist.begin());
  }
  std::set<std::vector<std::int64_t>> facets;
  for (const auto& t : tri) {
    std::vector<std::int64_t> f;
    for (int v : t) f.push_back(std::min(v, antipode[v]) + 1);
    std::sort(f.begin(), f.end());
    facets.insert(f);
  }
  std::vector<std::vector<std::int64_t>> raw(facets.begin(), facets.end());
  return from_facets(raw).with_name("RP^2 (6 vertices)");
}

Complex rp3_11(const Complex& block, std::uint64_t& seed_used) {
  const Complex bd = boundary(block);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ReductionOptions o;
    o.seed = seed;
    o.rounds = 20000;
    o.target_f = std::vector<std::int64_t>{11, 51, 80, 40};
    auto r = reduce(bd, o);
    if (r.converged && r.complex.vertex_count() == 11) {
      seed_used = seed;
      std::vector<std::vector<std::int64_t>> raw;
      for (const auto& f : r.complex.facets()) raw.emplace_back(f.begin(), f.end());
      return from_facets(raw).with_name("RP^3 (11 vertices)");
    }
  }
  throw std::runtime_error("could not reduce the block boundary to 11 vertices");
}

struct Entry {
  Complex complex;
  std::string file;
  std::string type;
  std::string provenance;
};

void warm(const Complex& c) {
  f_vector(c);
  auto fl = structural_flags(c);
  homology(c);
  if (fl.is_pseudomanifold) orientability(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the simplicia fixture library"};
  std::string out = SIMPLICIA_LIBRARY_DIR;
  app.add_option("-o,--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(out);

  std::vector<Entry> entries;
  auto add = [&](Complex c, std::string file, std::string type, std::string prov) {
    entries.push_back({std::move(c), std::move(file), std::move(type), std::move(prov)});
  };
  add(boundary_simplex(2), "bd_simplex_2.json", "S^1", "generated: boundary of the 2-simplex (3-cycle)");
  add(boundary_simplex(3), "bd_simplex_3.json", "S^2", "generated: boundary of the 3-simplex");
  add(boundary_simplex(4), "bd_simplex_4.json", "S^3", "generated: boundary of the 4-simplex");
  add(cross_polytope(3), "bd_cross_3.json", "S^2", "generated: octahedron, boundary of the 3-dimensional cross polytope");
  add(cross_polytope(4), "bd_cross_4.json", "S^3", "generated: boundary of the 4-dimensional cross polytope");
  add(cyclic_polytope_boundary(4, 6), "bd_cyclic_4_6.json", "S^3", "generated: Gale evenness, C_4(6)");
  add(cyclic_polytope_boundary(4, 10), "bd_cyclic_4_10.json", "S^3", "generated: Gale evenness, C_4(10)");
  add(cartesian_product(boundary_simplex(2), boundary_simplex(2)).with_name("T^2 (9 vertices)"), "torus_9.json",
      "T^2", "generated: staircase product of two 3-cycles");
  add(rp2_6(), "rp2_6.json", "RP^2", "generated: boundary of the icosahedron modulo the antipodal map");
  add(kummer(), "kummer_16.json", "Kummer variety",
      "generated: Kuhn triangulation of R^4/2Z^4 on {0,1}^4, quotient by x -> -x (16 vertices, 192 facets)");
  const Complex block = resolution_block();
  add(block, "resolution_block.json", "D(TS^2), boundary RP^3",
      "generated: full subcomplex on the diagonal of the staircase product Bd(Delta^3) x Bd(Delta^3) after "
      "stellar subdivision of every edge leaving the diagonal");
  std::uint64_t seed = 0;
  Complex rp3 = rp3_11(block, seed);
  add(rp3, "rp3_11.json", "RP^3",
      "generated: bistellar reduction (seed " + std::to_string(seed) + ") of the resolution block boundary");

  nlohmann::json index;
  index["schema_version"] = kSchemaVersion;
  index["entries"] = nlohmann::json::array();
  for (auto& e : entries) {
    warm(e.complex);
    save(e.complex, fs::path(out) / e.file);
    index["entries"].push_back(
        {{"name", e.complex.name()}, {"file", e.file}, {"topological_type", e.type}, {"provenance", e.provenance}});
    std::cout << e.file << "  f=" << nlohmann::json(f_vector(e.complex)).dump()
              << "  H=" << format_homology(homology(e.complex)) << "\n";
  }
  std::ofstream(fs::path(out) / "index.json") << index.dump(2) << "\n";
  validate_block({block, "RP^3", ""});
  return 0;
}
