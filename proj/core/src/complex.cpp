#include "simplicia/complex.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "simplicia/errors.hpp"

namespace simplicia {

namespace {
std::atomic<bool> g_validate_cache{false};
}

void set_cache_validation(bool enabled) { g_validate_cache.store(enabled); }
bool cache_validation_enabled() { return g_validate_cache.load(); }

std::string to_string(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) return std::to_string(*i);
  return std::get<std::string>(label);
}

nlohmann::json label_to_json(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) return *i;
  return std::get<std::string>(label);
}

Label label_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Label{j.get<std::int64_t>()};
  if (j.is_string()) return Label{j.get<std::string>()};
  throw InvalidArgument("label must be an integer or a string");
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Vertex v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<nlohmann::json> PropertyCache::get(std::string_view key) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return std::optional<nlohmann::json>(std::in_place, it->second);
}

nlohmann::json PropertyCache::publish(const std::string& key, nlohmann::json value) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = values_.try_emplace(key, std::move(value));
  if (!inserted && it->second != value) {
    throw CacheMismatch("cached property '" + key + "' differs from its recomputation");
  }
  return it->second;
}

std::map<std::string, nlohmann::json> PropertyCache::snapshot() const {
  std::lock_guard lock(mutex_);
  return {values_.begin(), values_.end()};
}

bool PropertyCache::empty() const {
  std::lock_guard lock(mutex_);
  return values_.empty();
}

namespace detail {
struct ComplexIndex {
  std::once_flag vertex_once;
  std::vector<std::vector<int>> vertex_facets;
  std::once_flag ridge_once;
  std::unordered_map<Face, std::vector<int>, FaceHash> ridge_facets;
};
}  // namespace detail

Complex::Complex()
    : index_(std::make_shared<detail::ComplexIndex>()),
      cache_(std::make_shared<PropertyCache>()) {}

Complex::Complex(std::vector<Face> facets, std::vector<Label> labels, std::string name)
    : facets_(std::move(facets)),
      labels_(std::move(labels)),
      name_(std::move(name)),
      index_(std::make_shared<detail::ComplexIndex>()),
      cache_(std::make_shared<PropertyCache>()) {
  std::size_t max_size = 0;
  for (const auto& f : facets_) max_size = std::max(max_size, f.size());
  dim_ = static_cast<int>(max_size) - 1;
  pure_ = std::all_of(facets_.begin(), facets_.end(),
                      [&](const Face& f) { return f.size() == max_size; });
}

Complex Complex::with_name(std::string name) const {
  Complex copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

const detail::ComplexIndex& Complex::index() const { return *index_; }

const std::vector<int>& Complex::facets_of_vertex(Vertex v) const {
  auto& idx = *index_;
  std::call_once(idx.vertex_once, [&] {
    idx.vertex_facets.assign(labels_.size() + 1, {});
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
      for (Vertex u : facets_[i]) idx.vertex_facets[u].push_back(i);
    }
  });
  static const std::vector<int> none;
  if (v < 1 || v > vertex_count()) return none;
  return idx.vertex_facets[v];
}

const std::vector<int>* Complex::facets_of_ridge(const Face& ridge) const {
  auto& idx = *index_;
  std::call_once(idx.ridge_once, [&] {
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
      const Face& f = facets_[i];
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face r;
        r.reserve(f.size() - 1);
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) r.push_back(f[t]);
        idx.ridge_facets[r].push_back(i);
      }
    }
  });
  auto it = idx.ridge_facets.find(ridge);
  return it == idx.ridge_facets.end() ? nullptr : &it->second;
}

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool Complex::contains_face(const Face& f) const {
  if (f.empty()) return !facets_.empty();
  for (int i : facets_of_vertex(f.front())) {
    if (is_subface(f, facets_[i])) return true;
  }
  return false;
}

std::vector<Label> Complex::labels_of(std::span<const Vertex> vertices) const {
  std::vector<Label> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(labels_.at(v - 1));
  return out;
}

void to_json(nlohmann::json& j, const StructuralFlags& f) {
  j = nlohmann::json{{"is_pure", f.is_pure},
                     {"is_connected", f.is_connected},
                     {"is_strongly_connected", f.is_strongly_connected},
                     {"is_pseudomanifold", f.is_pseudomanifold},
                     {"has_boundary", f.has_boundary}};
}

void from_json(const nlohmann::json& j, StructuralFlags& f) {
  j.at("is_pure").get_to(f.is_pure);
  j.at("is_connected").get_to(f.is_connected);
  j.at("is_strongly_connected").get_to(f.is_strongly_connected);
  j.at("is_pseudomanifold").get_to(f.is_pseudomanifold);
  j.at("has_boundary").get_to(f.has_boundary);
}

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

namespace {

// Sorts, deduplicates and drops non-maximal faces. Faces must be sorted.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.size() < 2) return faces;

  std::size_t max_size = 0;
  bool same_size = true;
  for (const auto& f : faces) {
    if (max_size != 0 && f.size() != max_size) same_size = false;
    max_size = std::max(max_size, f.size());
  }
  if (same_size) return faces;

  // Larger faces first; a face survives if no kept face contains it.
  std::vector<int> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return faces[a].size() > faces[b].size(); });
  std::unordered_map<Vertex, std::vector<int>> by_vertex;
  std::vector<char> keep(faces.size(), 0);
  for (int i : order) {
    const Face& f = faces[i];
    bool dominated = false;
    if (!f.empty()) {
      auto it = by_vertex.find(f.front());
      if (it != by_vertex.end()) {
        for (int j : it->second) {
          if (is_subface(f, faces[j])) {
            dominated = true;
            break;
          }
        }
      }
    } else {
      dominated = true;
    }
    if (dominated) continue;
    keep[i] = 1;
    for (Vertex v : f) by_vertex[v].push_back(i);
  }
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (keep[i]) out.push_back(std::move(faces[i]));
  return out;
}

}  // namespace

Complex from_facets(std::span<const std::vector<std::int64_t>> raw_facets,
                    std::optional<std::vector<Label>> labels) {
  if (raw_facets.empty()) throw InvalidArgument("no facets");
  std::vector<std::int64_t> values;
  for (const auto& f : raw_facets) {
    if (f.empty()) throw InvalidArgument("no facets");
    for (auto v : f) {
      if (v <= 0) throw InvalidArgument("bad vertex");
      values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (labels && static_cast<std::int64_t>(labels->size()) < values.back()) {
    throw InvalidArgument("label list shorter than the largest vertex");
  }

  auto compact = [&](std::int64_t v) {
    return static_cast<Vertex>(std::lower_bound(values.begin(), values.end(), v) -
                               values.begin()) + 1;
  };
  std::vector<Face> faces;
  faces.reserve(raw_facets.size());
  for (const auto& f : raw_facets) {
    Face face;
    face.reserve(f.size());
    for (auto v : f) face.push_back(compact(v));
    faces.push_back(make_face(std::move(face)));
  }
  faces = maximal_faces(std::move(faces));

  // Vertices only present in dropped faces still lie in a kept facet, so the
  // vertex set is unchanged by maximality filtering.
  std::vector<Label> out_labels;
  out_labels.reserve(values.size());
  for (auto v : values) {
    if (labels) out_labels.push_back((*labels)[v - 1]);
    else out_labels.emplace_back(v);
  }
  return Complex(std::move(faces), std::move(out_labels));
}

Complex from_facets(std::initializer_list<std::vector<std::int64_t>> raw_facets) {
  std::vector<std::vector<std::int64_t>> v(raw_facets);
  return from_facets(std::span<const std::vector<std::int64_t>>(v));
}

Complex subcomplex_from_faces(const Complex& ambient, std::vector<Face> faces, std::string name) {
  std::vector<Vertex> used;
  for (const auto& f : faces)
    used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Vertex> remap(ambient.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < used.size(); ++i) remap[used[i]] = static_cast<Vertex>(i + 1);
  for (auto& f : faces) {
    for (auto& v : f) v = remap[v];
  }
  faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }),
              faces.end());
  return Complex(maximal_faces(std::move(faces)), ambient.labels_of(used), std::move(name));
}

std::vector<Face> faces(const Complex& c, int k) {
  if (k < 0 || k > c.dim()) return {};
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  std::unordered_set<Face, FaceHash> seen;
  std::vector<Face> out;
  std::vector<int> pick;
  for (const auto& f : c.facets()) {
    if (f.size() < size) continue;
    // Enumerate size-subsets by index combinations.
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    const int n = static_cast<int>(f.size());
    while (true) {
      Face sub(size);
      for (std::size_t t = 0; t < size; ++t) sub[t] = f[pick[t]];
      if (seen.insert(sub).second) out.push_back(std::move(sub));
      int t = static_cast<int>(size) - 1;
      while (t >= 0 && pick[t] == n - static_cast<int>(size) + t) --t;
      if (t < 0) break;
      ++pick[t];
      for (std::size_t u = t + 1; u < size; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> f_vector(const Complex& c) {
  return cached(c, "f_vector", [&] {
           std::vector<std::int64_t> fv;
           for (int k = 0; k <= c.dim(); ++k) fv.push_back(static_cast<std::int64_t>(faces(c, k).size()));
           return fv;
         })
      .get<std::vector<std::int64_t>>();
}

namespace {
void require_face(const Complex& c, const Face& f) {
  if (f.empty() || !std::is_sorted(f.begin(), f.end()) ||
      std::adjacent_find(f.begin(), f.end()) != f.end() || f.front() < 1 ||
      f.back() > c.vertex_count() || !c.contains_face(f)) {
    throw InvalidArgument("not a face");
  }
}
}  // namespace

std::vector<Face> star_facets(const Complex& c, const Face& f) {
  require_face(c, f);
  std::vector<Face> out;
  for (int i : c.facets_of_vertex(f.front())) {
    if (is_subface(f, c.facets()[i])) out.push_back(c.facets()[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> link_facets(const Complex& c, const Face& f) {
  std::vector<Face> out;
  for (const auto& s : star_facets(c, f)) {
    Face g;
    std::set_difference(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(g));
    if (!g.empty()) out.push_back(std::move(g));
  }
  return maximal_faces(std::move(out));
}

Complex star(const Complex& c, const Face& f) {
  return subcomplex_from_faces(c, star_facets(c, f));
}

Complex link(const Complex& c, const Face& f) {
  return subcomplex_from_faces(c, link_facets(c, f));
}

std::vector<Face> boundary_facets(const Complex& c) {
  if (!c.is_pure()) throw PreconditionError("boundary requires a pure complex");
  if (c.empty() || c.dim() == 0) {
    // Ridges of a 0-complex are the empty face; a single point has boundary {∅},
    // which we represent by the empty complex like every other empty boundary.
    return {};
  }
  std::unordered_map<Face, int, FaceHash> count;
  for (const auto& f : c.facets()) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face r;
      r.reserve(f.size() - 1);
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != skip) r.push_back(f[t]);
      ++count[r];
    }
  }
  std::vector<Face> out;
  for (auto& [r, n] : count)
    if (n == 1) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Complex boundary(const Complex& c) { return subcomplex_from_faces(c, boundary_facets(c)); }

std::vector<Face> induced_facets(const Complex& c, std::span<const Vertex> vertices) {
  std::vector<char> in(c.vertex_count() + 1, 0);
  for (Vertex v : vertices) in.at(v) = 1;
  std::vector<Face> out;
  for (const auto& f : c.facets()) {
    Face g;
    for (Vertex v : f)
      if (in[v]) g.push_back(v);
    if (!g.empty()) out.push_back(std::move(g));
  }
  return maximal_faces(std::move(out));
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};
}  // namespace

StructuralFlags structural_flags(const Complex& c) {
  auto j = cached(c, "flags", [&] {
    StructuralFlags fl;
    fl.is_pure = c.is_pure();
    const int n = c.vertex_count();
    UnionFind uf(n + 1);
    int components = n;
    for (const auto& f : c.facets())
      for (std::size_t t = 1; t < f.size(); ++t)
        if (uf.unite(f[0], f[t])) --components;
    fl.is_connected = components <= 1;

    if (!fl.is_pure) {
      fl.is_strongly_connected = false;
      fl.is_pseudomanifold = false;
      fl.has_boundary = false;
      return nlohmann::json(fl);
    }
    if (c.dim() <= 0) {
      // Points: ridges are the empty face.
      fl.is_strongly_connected = fl.is_connected;
      fl.is_pseudomanifold = c.facet_count() <= 2;
      fl.has_boundary = c.facet_count() == 1;
      return nlohmann::json(fl);
    }
    const int m = static_cast<int>(c.facet_count());
    UnionFind dual(m);
    int dual_components = m;
    std::unordered_map<Face, std::vector<int>, FaceHash> ridges;
    for (int i = 0; i < m; ++i) {
      const Face& f = c.facets()[i];
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face r;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) r.push_back(f[t]);
        ridges[r].push_back(i);
      }
    }
    fl.is_pseudomanifold = true;
    fl.has_boundary = false;
    for (const auto& [r, inc] : ridges) {
      if (inc.size() > 2) fl.is_pseudomanifold = false;
      if (inc.size() == 1) fl.has_boundary = true;
      for (std::size_t t = 1; t < inc.size(); ++t)
        if (dual.unite(inc[0], inc[t])) --dual_components;
    }
    fl.is_strongly_connected = dual_components <= 1;
    return nlohmann::json(fl);
  });
  return j.get<StructuralFlags>();
}

Complex relabel(const Complex& c, std::span<const Vertex> perm) {
  const int n = c.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  std::vector<char> seen(n + 1, 0);
  for (Vertex v : perm) {
    if (v < 1 || v > n || seen[v]) throw InvalidArgument("not a permutation");
    seen[v] = 1;
  }
  std::vector<Face> facets;
  facets.reserve(c.facet_count());
  for (const auto& f : c.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(perm[v - 1]);
    facets.push_back(make_face(std::move(g)));
  }
  std::sort(facets.begin(), facets.end());
  std::vector<Label> labels(n);
  for (int v = 1; v <= n; ++v) labels[perm[v - 1] - 1] = c.labels()[v - 1];
  return Complex(std::move(facets), std::move(labels), c.name());
}

}  // namespace simplicia
