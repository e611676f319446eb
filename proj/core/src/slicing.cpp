#include "simplicia/slicing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simplicia/errors.hpp"
#include "simplicia/invariants.hpp"

namespace simplicia {

VertexPartition parse_partition(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InvalidArgument("partition must look like 1,3,5/2,4,6");
  auto side = [](const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw InvalidArgument("bad vertex '" + item + "' in partition");
      out.push_back(v);
    }
    return out;
  };
  return {side(text.substr(0, slash)), side(text.substr(slash + 1))};
}

std::vector<std::int64_t> NormalSurface::f_vector() const {
  return {static_cast<std::int64_t>(vertices.size()), static_cast<std::int64_t>(edges.size()),
          static_cast<std::int64_t>(triangles.size()), static_cast<std::int64_t>(quads.size())};
}

std::int64_t NormalSurface::euler_characteristic() const {
  auto f = f_vector();
  return f[0] - f[1] + f[2] + f[3];
}

void to_json(nlohmann::json& j, const NormalSurface& ns) {
  nlohmann::json verts = nlohmann::json::array();
  for (auto [u, w] : ns.vertices) verts.push_back({u, w});
  j = nlohmann::json{{"kind", "normal_surface"},
                     {"schema_version", 1},
                     {"name", ns.name},
                     {"labels", ns.labels},
                     {"ambient_edges", verts},
                     {"edges", ns.edges},
                     {"triangles", ns.triangles},
                     {"quads", ns.quads},
                     {"f_vector", ns.f_vector()}};
}

void from_json(const nlohmann::json& j, NormalSurface& ns) {
  if (j.value("kind", "") != "normal_surface") throw ParseError("kind", "expected \"normal_surface\"");
  if (j.value("schema_version", 0) != 1) throw SchemaVersionError(j.value("schema_version", 0), 1);
  ns = NormalSurface{};
  ns.name = j.at("name").get<std::string>();
  ns.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& e : j.at("ambient_edges")) ns.vertices.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  ns.edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
  ns.triangles = j.at("triangles").get<std::vector<std::array<int, 3>>>();
  ns.quads = j.at("quads").get<std::vector<std::array<int, 4>>>();
  const int n = static_cast<int>(ns.vertices.size());
  if (static_cast<int>(ns.labels.size()) != n) throw ParseError("labels", "one label per vertex expected");
  auto check = [n](int v, const char* where) {
    if (v < 1 || v > n) throw ParseError(where, "vertex out of range");
  };
  for (auto [a, b] : ns.edges) check(a, "edges"), check(b, "edges");
  for (const auto& t : ns.triangles)
    for (int v : t) check(v, "triangles");
  for (const auto& q : ns.quads)
    for (int v : q) check(v, "quads");
  if (j.contains("f_vector") && j["f_vector"].get<std::vector<std::int64_t>>() != ns.f_vector())
    throw ParseError("f_vector", "does not match the cell lists");
}

NormalSurface slicing(const Complex& c, const VertexPartition& p) {
  auto fl = structural_flags(c);
  if (c.dim() != 3 || !fl.is_pseudomanifold || fl.has_boundary)
    throw InvalidArgument("only 3-manifold slicings supported");
  const int n = c.vertex_count();
  std::vector<int> side(n + 1, -1);
  for (Vertex v : p.side_a) {
    if (v < 1 || v > n || side[v] != -1) throw InvalidArgument("invalid partition");
    side[v] = 0;
  }
  for (Vertex v : p.side_b) {
    if (v < 1 || v > n || side[v] != -1) throw InvalidArgument("invalid partition");
    side[v] = 1;
  }
  if (p.side_a.empty() || p.side_b.empty() ||
      std::find(side.begin() + 1, side.end(), -1) != side.end())
    throw InvalidArgument("invalid partition");

  NormalSurface ns;
  ns.name = "slicing of " + (c.name().empty() ? std::string("complex") : c.name());
  std::map<std::pair<Vertex, Vertex>, int> id;
  for (const auto& e : faces(c, 1)) {
    if (side[e[0]] == side[e[1]]) continue;
    ns.vertices.emplace_back(e[0], e[1]);
    ns.labels.push_back(to_string(c.labels()[e[0] - 1]) + "-" + to_string(c.labels()[e[1] - 1]));
    id[{e[0], e[1]}] = static_cast<int>(ns.vertices.size());
  }
  auto at = [&](Vertex u, Vertex w) { return id.at({std::min(u, w), std::max(u, w)}); };
  for (const auto& t : faces(c, 2)) {
    std::vector<int> mixed;
    for (int i = 0; i < 3; ++i)
      for (int k = i + 1; k < 3; ++k)
        if (side[t[i]] != side[t[k]]) mixed.push_back(at(t[i], t[k]));
    if (mixed.size() == 2) ns.edges.emplace_back(std::min(mixed[0], mixed[1]), std::max(mixed[0], mixed[1]));
  }
  std::sort(ns.edges.begin(), ns.edges.end());
  for (const auto& f : c.facets()) {
    std::vector<Vertex> a, b;
    for (Vertex v : f) (side[v] == 0 ? a : b).push_back(v);
    if (a.empty() || b.empty()) continue;
    if (a.size() == 2) {
      ns.quads.push_back({at(a[0], b[0]), at(a[0], b[1]), at(a[1], b[1]), at(a[1], b[0])});
    } else {
      const auto& one = a.size() == 1 ? a : b;
      const auto& three = a.size() == 1 ? b : a;
      std::array<int, 3> t{at(one[0], three[0]), at(one[0], three[1]), at(one[0], three[2])};
      std::sort(t.begin(), t.end());
      ns.triangles.push_back(t);
    }
  }
  return ns;
}

Complex ns_triangulation(const NormalSurface& ns) {
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& t : ns.triangles) raw.push_back({t[0], t[1], t[2]});
  for (const auto& q : ns.quads) {
    const int start = static_cast<int>(std::min_element(q.begin(), q.end()) - q.begin());
    auto corner = [&](int k) { return static_cast<std::int64_t>(q[(start + k) % 4]); };
    raw.push_back({corner(0), corner(1), corner(2)});
    raw.push_back({corner(0), corner(2), corner(3)});
  }
  if (raw.empty()) return Complex();
  std::vector<Label> labels(ns.labels.begin(), ns.labels.end());
  return from_facets(raw, labels).with_name(ns.name);
}

namespace {

std::string describe(bool orientable, int genus) {
  if (orientable) {
    if (genus == 0) return "S^2";
    if (genus == 1) return "T^2";
    return "(T^2)#" + std::to_string(genus);
  }
  if (genus == 1) return "RP^2";
  return "(RP^2)#" + std::to_string(genus);
}

}  // namespace

SurfaceType surface_type(const Complex& surface) {
  auto fl = structural_flags(surface);
  if (surface.dim() != 2 || !fl.is_pseudomanifold || fl.has_boundary)
    throw PreconditionError("not a closed surface");
  // Split into connected components along the vertex-edge graph.
  const int n = surface.vertex_count();
  std::vector<int> comp(n + 1, -1);
  int count = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (int i : surface.facets_of_vertex(u))
        for (Vertex w : surface.facets()[i])
          if (comp[w] == -1) {
            comp[w] = count;
            stack.push_back(w);
          }
    }
    ++count;
  }
  std::vector<std::vector<Face>> parts(count);
  for (const auto& f : surface.facets()) parts[comp[f[0]]].push_back(f);
  SurfaceType out;
  out.components = count;
  out.chi = euler_characteristic(surface);
  std::vector<std::string> names;
  for (auto& part : parts) {
    Complex piece = subcomplex_from_faces(surface, std::move(part));
    const bool orientable = orientability(piece).orientable;
    const auto chi = euler_characteristic(piece);
    const int genus = static_cast<int>(orientable ? (2 - chi) / 2 : 2 - chi);
    out.orientable = out.orientable && orientable;
    out.genus += genus;
    names.push_back(describe(orientable, genus));
  }
  std::ostringstream d;
  for (std::size_t i = 0; i < names.size(); ++i) d << (i ? " + " : "") << names[i];
  out.descriptor = d.str();
  return out;
}

SurfaceType surface_type(const NormalSurface& ns) {
  auto out = surface_type(ns_triangulation(ns));
  out.chi = ns.euler_characteristic();
  return out;
}

}  // namespace simplicia
