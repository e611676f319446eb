#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "simplicia/blowup.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/export.hpp"
#include "simplicia/generators.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/library.hpp"
#include "simplicia/reduction.hpp"
#include "simplicia/slicing.hpp"
#include "simplicia/store.hpp"

using namespace simplicia;
using nlohmann::json;

namespace {

std::string list(const std::vector<std::int64_t>& v) { return json(v).dump(); }

// FILE arguments accept a path or "lib:NAME" for a library entry.
Complex load_complex(const std::string& arg) {
  if (arg.rfind("lib:", 0) == 0) {
    auto lib = Library::open();
    const std::string name = arg.substr(4);
    if (const auto* e = lib.find(name)) return e->complex;
    auto hits = lib.search_name(name);
    if (hits.size() == 1) return hits.front()->complex;
    throw InvalidArgument(hits.empty() ? "no library entry matches '" + name + "'"
                                       : "library name '" + name + "' is ambiguous");
  }
  return load(arg).complex;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("cannot write " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json info_json(const Complex& c) {
  json j;
  j["name"] = c.name();
  j["dim"] = c.dim();
  j["f_vector"] = f_vector(c);
  j["euler_characteristic"] = euler_characteristic(c);
  auto fl = structural_flags(c);
  j["flags"] = fl;
  j["homology"] = homology(c);
  if (fl.is_pure && !c.empty()) {
    auto hg = hg_vectors(c);
    j["h_vector"] = hg.h;
    j["g_vector"] = hg.g;
  }
  if (fl.is_pseudomanifold && !c.empty()) j["orientable"] = orientability(c).orientable;
  return j;
}

const char* tf(bool b) { return b ? "true" : "false"; }

void print_flags(const StructuralFlags& fl) {
  std::cout << "IsPure=" << tf(fl.is_pure) << "\n"
            << "IsConnected=" << tf(fl.is_connected) << "\n"
            << "IsStronglyConnected=" << tf(fl.is_strongly_connected) << "\n"
            << "IsPM=" << tf(fl.is_pseudomanifold) << "\n"
            << "HasBoundary=" << tf(fl.has_boundary) << "\n";
}

void print_info(const Complex& c) {
  if (!c.name().empty()) std::cout << "Name=\"" << c.name() << "\"\n";
  std::cout << "Dim=" << c.dim() << "\n";
  std::cout << "F=" << list(f_vector(c)) << "\n";
  std::cout << "Chi=" << euler_characteristic(c) << "\n";
  auto fl = structural_flags(c);
  if (fl.is_pure && !c.empty()) {
    auto hg = hg_vectors(c);
    std::cout << "H=" << list(hg.h_transcript()) << "\n";
    std::cout << "G=" << list(hg.g_transcript()) << "\n";
  }
  std::cout << "Homology=" << format_homology(homology(c)) << "\n";
  print_flags(fl);
  if (fl.is_pseudomanifold && !c.empty()) std::cout << "IsOrientable=" << tf(orientability(c).orientable) << "\n";
}

Family parse_family(const std::string& s) {
  if (s == "simplex") return Family::simplex;
  if (s == "bdsimplex") return Family::boundary_simplex;
  if (s == "cross") return Family::cross_polytope;
  if (s == "cyclic") return Family::cyclic_boundary;
  return Family::stacked_sphere;
}

ResolutionBlock default_block() {
  auto lib = Library::open();
  auto hits = lib.search_name("resolution block");
  if (hits.empty()) throw InvalidArgument("no resolution block in library " + lib.directory().string());
  return {hits.front()->complex, "RP^3", hits.front()->provenance};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicia: simplicial complexes, bistellar moves, slicings and blowups"};
  app.require_subcommand(1);

  std::string file, file2, out, kind, sides, query, format, block_file;
  int d = -1, n = -1, rounds = -1;
  Vertex vertex = 0;
  std::uint64_t seed = 0;
  bool as_json = false;

  auto* construct = app.add_subcommand("construct", "build a standard triangulation");
  construct->add_option("family", kind, "simplex|bdsimplex|cross|cyclic|stacked")
      ->required()
      ->check(CLI::IsMember({"simplex", "bdsimplex", "cross", "cyclic", "stacked"}));
  construct->add_option("-d", d, "dimension")->required();
  construct->add_option("-n", n, "number of vertices (cyclic, stacked)");
  construct->add_option("--seed", seed, "seed (stacked)");
  construct->add_option("-o", out, "output file")->required();

  auto* info = app.add_subcommand("info", "f-, h-, g-vectors, homology and flags");
  info->add_option("file", file)->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* hom = app.add_subcommand("homology", "integral homology, reduced in degree 0");
  hom->add_option("file", file)->required();
  hom->add_flag("--json", as_json);

  auto* flags = app.add_subcommand("flags", "purity, connectivity, pseudomanifold, boundary");
  flags->add_option("file", file)->required();
  flags->add_flag("--json", as_json);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce the vertex number by bistellar moves");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--seed", seed);
  reduce_cmd->add_option("--rounds", rounds);
  reduce_cmd->add_option("-o", out)->required();

  auto* equiv = app.add_subcommand("equivalent", "search for a bistellar equivalence");
  equiv->add_option("file1", file)->required();
  equiv->add_option("file2", file2)->required();
  equiv->add_option("--seed", seed);
  equiv->add_option("--rounds", rounds);

  auto* slice = app.add_subcommand("slice", "normal surface separating a vertex bipartition");
  slice->add_option("file", file)->required();
  slice->add_option("--sides", sides, "A/B, e.g. 1,3,5/2,4,6")->required();
  slice->add_option("-o", out);
  slice->add_flag("--json", as_json);

  auto* nstri = app.add_subcommand("nstriangulate", "triangulate a normal surface");
  nstri->add_option("file", file, "normal surface written by 'slice'")->required();
  nstri->add_option("-o", out)->required();

  auto* blow = app.add_subcommand("blowup", "resolve an ordinary double point");
  blow->add_option("file", file)->required();
  blow->add_option("--vertex", vertex)->required();
  blow->add_option("--block", block_file, "resolution block (default: from the library)");
  blow->add_option("--seed", seed);
  blow->add_option("-o", out)->required();

  auto* lk = app.add_subcommand("link", "link of a vertex");
  lk->add_option("file", file)->required();
  lk->add_option("--vertex", vertex)->required();
  lk->add_option("-o", out)->required();

  auto* sing = app.add_subcommand("singular", "vertices of a 4-pseudomanifold without sphere links");
  sing->add_option("file", file)->required();
  sing->add_option("--seed", seed);
  sing->add_flag("--json", as_json);

  auto* lib = app.add_subcommand("lib", "fixture library");
  lib->require_subcommand(1);
  auto* lib_search = lib->add_subcommand("search", "search by name substring or property predicate");
  lib_search->add_option("query", query)->required();
  lib_search->add_flag("--json", as_json);
  auto* lib_list = lib->add_subcommand("list", "list all entries");

  auto* exp = app.add_subcommand("export", "LaTeX or TOPAZ-style text");
  exp->add_option("file", file)->required();
  exp->add_option("--format", format)->required()->check(CLI::IsMember({"latex", "topaz"}));
  exp->add_option("-o", out);

  CLI11_PARSE(app, argc, argv);

  try {
    ReductionOptions ro;
    ro.seed = seed;
    if (rounds > 0) ro.rounds = rounds;

    if (*construct) {
      SeriesSpec s{parse_family(kind), d, n, seed};
      if ((s.family == Family::cyclic_boundary || s.family == Family::stacked_sphere) && n < 0)
        throw InvalidArgument("-n is required for " + kind);
      Complex c = generate(s);
      save(c, out);
      std::cout << "F=" << list(f_vector(c)) << "\n";
    } else if (*info) {
      Complex c = load_complex(file);
      if (as_json) std::cout << info_json(c).dump(2) << "\n";
      else print_info(c);
    } else if (*hom) {
      Complex c = load_complex(file);
      auto h = homology(c);
      if (as_json) std::cout << json(h).dump() << "\n";
      else std::cout << "Homology=" << format_homology(h) << "\n";
    } else if (*flags) {
      Complex c = load_complex(file);
      auto fl = structural_flags(c);
      if (as_json) std::cout << json(fl).dump(2) << "\n";
      else print_flags(fl);
    } else if (*reduce_cmd) {
      Complex c = load_complex(file);
      auto r = reduce(c, ro);
      save(r.complex, out, r.moves);
      std::cout << "F=" << list(f_vector(c)) << " -> " << list(f_vector(r.complex)) << "\n"
                << "moves=" << r.moves.size() << " rounds=" << r.rounds_used
                << " converged=" << tf(r.converged) << "\n";
    } else if (*equiv) {
      Complex a = load_complex(file);
      Complex b = load_complex(file2);
      auto r = bistellarly_equivalent(a, b, ro);
      if (r.established) std::cout << "bistellarly equivalent (rounds " << r.rounds_used << ")\n";
      else std::cout << "not established (" << r.reason << ")\n";
    } else if (*slice) {
      Complex c = load_complex(file);
      auto ns = slicing(c, parse_partition(sides));
      auto t = surface_type(ns);
      if (!out.empty()) write_text(out, json(ns).dump(2) + "\n");
      if (as_json) {
        std::cout << json{{"f_vector", ns.f_vector()}, {"chi", t.chi}, {"components", t.components},
                          {"orientable", t.orientable}, {"type", t.descriptor}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "F=" << list(ns.f_vector()) << "\n"
                  << "Chi=" << t.chi << "\n"
                  << "IsConnected=" << tf(t.components == 1) << "\n"
                  << "IsOrientable=" << tf(t.orientable) << "\n"
                  << "TopologicalType=\"" << t.descriptor << "\"\n";
      }
    } else if (*nstri) {
      json j;
      try {
        j = json::parse(read_text(file));
      } catch (const json::parse_error& e) {
        throw ParseError(file, e.what());
      }
      Complex c = ns_triangulation(j.get<NormalSurface>());
      save(c, out);
      std::cout << "F=" << list(f_vector(c)) << "\n"
                << "Homology=" << format_homology(homology(c)) << "\n";
    } else if (*blow) {
      Complex c = load_complex(file);
      ResolutionBlock rb = block_file.empty() ? default_block() : ResolutionBlock{load(block_file).complex, "RP^3", block_file};
      BlowupOptions bo;
      bo.reduction = ro;
      bo.log = [](const json& j) { std::cout << j.dump() << "\n" << std::flush; };
      auto r = blowup(c, vertex, rb, bo);
      save(r.complex, out);
    } else if (*lk) {
      Complex c = load_complex(file);
      if (vertex < 1 || vertex > c.vertex_count()) throw InvalidArgument("vertex out of range");
      Complex l = link(c, {vertex});
      save(l, out);
      std::cout << "F=" << list(f_vector(l)) << "\n"
                << "Homology=" << format_homology(homology(l)) << "\n";
    } else if (*sing) {
      Complex c = load_complex(file);
      auto s = singular_vertices(c, ro);
      if (as_json) {
        json arr = json::array();
        for (const auto& x : s)
          arr.push_back({{"vertex", x.vertex}, {"label", label_to_json(c.labels()[x.vertex - 1])},
                         {"link_homology", x.link_homology}, {"suspect", x.suspect}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& x : s)
          std::cout << x.vertex << " " << format_homology(x.link_homology) << (x.suspect ? " suspect" : "") << "\n";
        std::cout << "count=" << s.size() << "\n";
      }
    } else if (*lib) {
      auto l = Library::open();
      std::vector<const LibraryEntry*> hits;
      if (*lib_list) {
        for (const auto& e : l.entries()) hits.push_back(&e);
      } else {
        hits = l.search(query);
      }
      if (as_json) {
        json arr = json::array();
        for (const auto* e : hits)
          arr.push_back({{"name", e->name}, {"file", e->file}, {"topological_type", e->topological_type}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto* e : hits)
          std::cout << e->name << "\t" << e->topological_type << "\t" << e->file << "\n";
      }
    } else if (*exp) {
      Complex c = load_complex(file);
      std::string text = format == "latex" ? export_latex(c) : export_topaz(c);
      if (out.empty()) std::cout << text;
      else write_text(out, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "simplicia: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
