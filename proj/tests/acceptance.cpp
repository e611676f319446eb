// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "simplicia/bistellar.hpp"
#include "simplicia/blowup.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/isomorphism.hpp"
#include "simplicia/library.hpp"
#include "simplicia/reduction.hpp"
#include "simplicia/slicing.hpp"
#include "simplicia/snf.hpp"
#include "simplicia/store.hpp"
#include "oracles.hpp"

using namespace simplicia;
namespace fs = std::filesystem;
using F = std::vector<std::int64_t>;

namespace {

const fs::path kFixtures = SIMPLICIA_FIXTURE_DIR;

enum class Outcome { pass, fail, skip };

struct Check {
  Outcome outcome = Outcome::pass;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      outcome = Outcome::fail;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
  void skip(const std::string& why) {
    outcome = Outcome::skip;
    note = why;
  }
};

std::string H(const Complex& c) { return format_homology(homology(c)); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void cyclic_golden(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto cy = cyclic_polytope_boundary(4, 10);
  c.expect(f_vector(cy) == F{10, 45, 70, 35}, "f-vector");
  c.expect(euler_characteristic(cy) == 0, "chi");
  c.expect(H(cy) == "[[0,[]],[0,[]],[0,[]],[1,[]]]", "homology " + H(cy));
  auto fl = structural_flags(cy);
  c.expect(fl.is_pure && fl.is_strongly_connected && fl.is_pseudomanifold && !fl.has_boundary, "flags");
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "runtime " + std::to_string(s) + " s");
}

void slicing_golden(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto cy = cyclic_polytope_boundary(4, 10);
  auto ns = slicing(cy, parse_partition("1,3,5,7,9/2,4,6,8,10"));
  c.expect(ns.f_vector() == F{25, 70, 0, 35}, "NS f-vector");
  c.expect(ns.euler_characteristic() == -10, "NS chi");
  auto t = surface_type(ns);
  c.expect(t.components == 1, "connected");
  c.expect(t.orientable, "orientable");
  c.expect(t.descriptor == "(T^2)#6", "type " + t.descriptor);
  auto tri = ns_triangulation(ns);
  c.expect(f_vector(tri) == F{25, 105, 70}, "triangulation f-vector");
  auto h = homology(tri);
  c.expect(h[0].betti == 0 && h[1].betti == 12 && h[2].betti == 1, "triangulation betti numbers");
  const double s = seconds_since(t0);
  c.expect(s < 1.0, "runtime " + std::to_string(s) + " s");
}

void hg_golden(Check& c) {
  auto hg = hg_vectors_from_f(F{16, 120, 400, 480, 192});
  c.expect(hg.h_transcript() == F{11, 66, 126, -19, 7}, "H");
  c.expect(hg.g_transcript() == F{10, 55, 60}, "G");
}

void homology_oracle(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(20100105);
  std::uniform_int_distribution<int> entry(-9, 9);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    oracles::Dense d(6, std::vector<std::int64_t>(6));
    for (auto& row : d)
      for (auto& x : row) x = entry(gen);
    if (smith_normal_form(IntegerMatrix::from_dense(d)).invariant_factors != oracles::minors_oracle(oracles::big(d)))
      ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " SNF mismatches");
  if (!fs::exists(kFixtures / "rp2_6.json") || !fs::exists(kFixtures / "torus_9.json")) {
    c.expect(false, "rp2_6 / torus_9 fixtures missing");
    return;
  }
  c.expect(H(load(kFixtures / "rp2_6.json").complex) == "[[0,[]],[0,[2]],[0,[]]]", "RP^2 homology");
  c.expect(H(load(kFixtures / "torus_9.json").complex) == "[[0,[]],[2,[]],[1,[]]]", "torus homology");
  const double s = seconds_since(t0);
  c.expect(s < 10.0, "runtime " + std::to_string(s) + " s");
}

void bistellar_invariance(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  int bad_invariant = 0, bad_involution = 0;
  for (const auto& base : {boundary_simplex(4), cross_polytope(3)}) {
    const auto h0 = homology(base);
    const auto chi0 = euler_characteristic(base);
    const bool or0 = orientability(base).orientable;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto r = randomize(base, 1 + static_cast<int>(seed % 30), seed);
      Complex cur = base;
      for (const auto& m : r.moves) {
        Complex next = apply_move(cur, m);
        if (homology(next) != h0 || euler_characteristic(next) != chi0 || orientability(next).orientable != or0)
          ++bad_invariant;
        if (!(apply_move(next, reverse_move(cur, m)) == cur)) ++bad_involution;
        cur = std::move(next);
      }
    }
  }
  c.expect(bad_invariant == 0, std::to_string(bad_invariant) + " invariant changes");
  c.expect(bad_involution == 0, std::to_string(bad_involution) + " failed involutions");
  const double s = seconds_since(t0);
  c.expect(s < 30.0, "runtime " + std::to_string(s) + " s");
}

void reduction_round_trip(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  const auto target = boundary_simplex(4);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ReductionOptions o;
    o.seed = seed;
    auto r = reduce(randomize(target, 50, seed).complex, o);
    if (r.converged && is_isomorphic(r.complex, target)) ++ok;
  }
  c.note = std::to_string(ok) + "/100 reduced";
  c.expect(ok >= 95, "too few reductions");
  const double s = seconds_since(t0);
  c.expect(s < 120.0, "runtime " + std::to_string(s) + " s");
}

void kummer_suite(Check& c) {
  for (const char* f : {"kummer_16.json", "rp3_11.json", "resolution_block.json"}) {
    if (!fs::exists(kFixtures / f)) {
      c.skip(std::string("fixture ") + f + " absent");
      return;
    }
  }
  auto k = load(kFixtures / "kummer_16.json").complex;
  auto rp3 = load(kFixtures / "rp3_11.json").complex;
  auto block = load(kFixtures / "resolution_block.json").complex;
  c.expect(f_vector(k) == F{16, 120, 400, 480, 192}, "Kummer f-vector");
  c.expect(euler_characteristic(k) == 8, "Kummer chi");
  c.expect(H(k) == "[[0,[]],[0,[]],[6,[2,2,2,2,2]],[0,[]],[1,[]]]", "Kummer homology");
  auto lk = link(k, {1});
  c.expect(H(lk) == "[[0,[]],[0,[2]],[0,[]],[1,[]]]", "link homology");
  c.expect(bistellarly_equivalent(lk, rp3).established, "link not shown equivalent to RP^3");

  auto r = blowup(k, 1, {block, "RP^3", "fixture"});
  auto h = homology(r.complex);
  c.expect(h[2] == HomologyGroup{7, {2, 2, 2, 2}}, "blown-up H_2 " + format_homology(h));
  c.expect(euler_characteristic(r.complex) == 9, "blown-up chi");
  auto fl = structural_flags(r.complex);
  c.expect(fl.is_pseudomanifold && !fl.has_boundary, "blown-up complex not a closed pseudomanifold");
  c.expect(orientability(r.complex).orientable, "orientability lost");
  const auto singular = singular_vertices(r.complex);
  c.expect(singular.size() == 15, std::to_string(singular.size()) + " singular vertices");
  if (c.outcome == Outcome::pass)
    c.note = "blown-up f=" + nlohmann::json(f_vector(r.complex)).dump() + ", 15 singular vertices";
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  if (!fs::exists(kFixtures)) return out;
  for (const auto& e : fs::directory_iterator(kFixtures))
    if (e.path().extension() == ".json" && e.path().filename() != "index.json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

void persistence(Check& c) {
  auto files = fixture_files();
  if (files.empty()) {
    c.expect(false, "no fixtures");
    return;
  }
  const fs::path tmp = fs::temp_directory_path() / "simplicia_acceptance_roundtrip.json";
  int mismatches = 0;
  for (const auto& p : files) {
    auto d = load(p);
    save(d.complex, tmp, d.move_log);
    auto again = load(tmp);
    if (slurp(tmp) != slurp(p) || !(again.complex == d.complex) ||
        again.complex.cache().snapshot() != d.complex.cache().snapshot())
      c.expect(false, "round trip differs for " + p.filename().string());
    try {
      load(p, true);
    } catch (const std::exception& e) {
      ++mismatches;
      c.expect(false, p.filename().string() + ": " + e.what());
    }
  }
  fs::remove(tmp);
  try {
    Library::open(kFixtures, true);
  } catch (const std::exception& e) {
    c.expect(false, std::string("strict library load: ") + e.what());
  }
  if (c.outcome == Outcome::pass) c.note = std::to_string(files.size()) + " fixtures, 0 mismatches";
}

void coverage_guard(Check& c) {
  int checked = 0;
  for (const auto& p : fixture_files()) {
    auto cx = load(p).complex;
    if (!structural_flags(cx).is_connected) continue;
    auto ab = abelianization(fundamental_group_presentation(cx));
    auto h = homology(cx);
    if (h.size() < 2) continue;
    c.expect(ab == h[1], p.filename().string());
    ++checked;
  }
  c.expect(checked > 0, "no connected fixtures");
  if (c.outcome == Outcome::pass) c.note = std::to_string(checked) + " fixtures";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"cyclic polytope golden test", cyclic_golden},
      {"slicing golden test", slicing_golden},
      {"h/g-vector golden test", hg_golden},
      {"homology engine oracle suite", homology_oracle},
      {"bistellar invariance property suite", bistellar_invariance},
      {"reduction round-trip", reduction_round_trip},
      {"Kummer suite", kummer_suite},
      {"persistence", persistence},
      {"coverage guard", coverage_guard},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const char* tag = c.outcome == Outcome::pass ? "PASS" : c.outcome == Outcome::fail ? "FAIL" : "SKIP";
    if (c.outcome == Outcome::fail) ++failures;
    std::printf("criterion %zu %-38s %s  (%.2f s)%s%s\n", i + 1, criteria[i].first.c_str(), tag, seconds_since(t0),
                c.note.empty() ? "" : "  ", c.note.c_str());
    std::fflush(stdout);
  }
  return failures;
}
