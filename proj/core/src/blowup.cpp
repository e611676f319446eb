#include "simplicia/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "reducer.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/isomorphism.hpp"

namespace simplicia {

HomologyProfile rp3_homology() {
  HomologyProfile h;
  h.groups = {{0, {}}, {0, {2}}, {0, {}}, {1, {}}};
  return h;
}

void validate_block(const ResolutionBlock& b) {
  const Complex& c = b.block;
  auto fl = structural_flags(c);
  if (c.dim() != 4 || !fl.is_pure || !fl.is_strongly_connected || !fl.is_pseudomanifold)
    throw PreconditionError("resolution block must be a pure strongly connected 4-pseudomanifold");
  Complex bd = boundary(c);
  auto bfl = structural_flags(bd);
  if (bd.dim() != 3 || !bfl.is_pseudomanifold || bfl.has_boundary)
    throw PreconditionError("resolution block boundary must be a closed 3-pseudomanifold");
  if (homology(bd) != rp3_homology()) throw PreconditionError("resolution block boundary is not a homology RP^3");
  if (homology(c)[2].betti != 1) throw PreconditionError("resolution block must have b_2 = 1");
}

std::vector<SingularVertex> singular_vertices(const Complex& c, const ReductionOptions& opts) {
  auto fl = structural_flags(c);
  if (c.dim() != 4 || !fl.is_pseudomanifold || fl.has_boundary)
    throw PreconditionError("singular_vertices expects a closed 4-pseudomanifold");
  std::vector<SingularVertex> out;
  for (int v = 1; v <= c.vertex_count(); ++v) {
    auto lk = link(c, {v});
    auto h = homology(lk);
    if (h != sphere_homology(3)) {
      out.push_back({v, h, false});
      continue;
    }
    auto status = vertex_link_status(c, v, opts);
    if (status != ManifoldStatus::manifold) out.push_back({v, h, status == ManifoldStatus::unknown});
  }
  return out;
}

bool is_ordinary_double_point(const Complex& c, Vertex v, const Complex& rp3, const ReductionOptions& opts) {
  if (v < 1 || v > c.vertex_count()) throw InvalidArgument("vertex out of range");
  auto lk = link(c, {v});
  if (lk.dim() != 3 || homology(lk) != homology(rp3)) return false;
  return bistellarly_equivalent(lk, rp3, opts).established;
}

namespace {

// The block under construction, in its own vertex ids. The boundary is kept
// as a set of tetrahedra and updated by symmetric difference on every glue.
class Block {
 public:
  explicit Block(const Complex& c) {
    // Renumber so the boundary vertices come first: then boundary(block) keeps ids.
    auto bfacets = boundary_facets(c);
    std::vector<char> on_boundary(c.vertex_count() + 1, 0);
    for (const auto& f : bfacets)
      for (Vertex v : f) on_boundary[v] = 1;
    std::vector<Vertex> id(c.vertex_count() + 1, 0);
    Vertex next = 0;
    for (int v = 1; v <= c.vertex_count(); ++v)
      if (on_boundary[v]) id[v] = ++next;
    boundary_vertices_ = next;
    for (int v = 1; v <= c.vertex_count(); ++v)
      if (!on_boundary[v]) id[v] = ++next;
    next_id_ = next + 1;
    for (const auto& f : c.facets()) add_facet(map(f, id));
    for (const auto& f : bfacets) boundary_.insert(map(f, id));
  }

  Vertex boundary_vertex_count() const { return boundary_vertices_; }
  Vertex next_id() const { return next_id_; }
  Vertex fresh() { return next_id_++; }
  void reserve_id(Vertex v) { next_id_ = std::max(next_id_, v + 1); }

  const std::set<Face>& boundary() const { return boundary_; }
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (alive_[i]) out.push_back(facets_[i]);
    return out;
  }

  bool contains_face(const Face& f) const {
    auto it = by_vertex_.find(f.front());
    if (it == by_vertex_.end()) return false;
    for (int i : it->second)
      if (alive_[i] && is_subface(f, facets_[i])) return true;
    return false;
  }

  /// Stellar subdivision of a face that is not on the boundary. The boundary
  /// is untouched and f stops being a face.
  void subdivide(const Face& f) {
    const Vertex w = fresh();
    std::vector<int> hit;
    for (int i : by_vertex_.at(f.front()))
      if (alive_[i] && is_subface(f, facets_[i])) hit.push_back(i);
    for (int i : hit) {
      alive_[i] = 0;
      const Face old = facets_[i];
      for (Vertex x : f) {
        Face g;
        for (Vertex y : old)
          if (y != x) g.push_back(y);
        g.push_back(w);
        add_facet(make_face(std::move(g)));
      }
    }
  }

  /// Glues the simplex s onto the block; its faces on the boundary become interior.
  void glue(Face s) {
    s = make_face(std::move(s));
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Face t;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip) t.push_back(s[k]);
      if (!boundary_.erase(t)) boundary_.insert(std::move(t));
    }
    add_facet(std::move(s));
  }

  /// Attaches boundary x [0,1] and returns old id -> new id for the boundary vertices.
  std::map<Vertex, Vertex> collar() {
    std::map<Vertex, Vertex> copy;
    for (const auto& t : boundary_)
      for (Vertex v : t)
        if (!copy.count(v)) copy[v] = 0;
    for (auto& [v, w] : copy) w = fresh();
    std::set<Face> fresh_boundary;
    for (const auto& t : boundary_) {
      // Staircase prism: {t0..tk} at level 0 followed by {tk..t3} at level 1.
      for (std::size_t k = 0; k < t.size(); ++k) {
        Face s(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        for (std::size_t m = k; m < t.size(); ++m) s.push_back(copy[t[m]]);
        add_facet(make_face(std::move(s)));
      }
      Face top;
      for (Vertex v : t) top.push_back(copy[v]);
      fresh_boundary.insert(make_face(std::move(top)));
    }
    boundary_ = std::move(fresh_boundary);
    return copy;
  }

 private:
  std::vector<Face> facets_;
  std::vector<char> alive_;
  std::unordered_map<Vertex, std::vector<int>> by_vertex_;
  std::set<Face> boundary_;
  Vertex boundary_vertices_ = 0;
  Vertex next_id_ = 1;

  static Face map(const Face& f, const std::vector<Vertex>& id) {
    Face g;
    for (Vertex v : f) g.push_back(id[v]);
    return make_face(std::move(g));
  }

  void add_facet(Face f) {
    const int i = static_cast<int>(facets_.size());
    for (Vertex v : f) by_vertex_[v].push_back(i);
    facets_.push_back(std::move(f));
    alive_.push_back(1);
  }
};

nlohmann::json fjson(const std::vector<std::int64_t>& f) { return nlohmann::json(f); }

}  // namespace

BlowupResult blowup(const Complex& c, Vertex v, const ResolutionBlock& rb, const BlowupOptions& opts) {
  auto log = [&](nlohmann::json j) {
    if (opts.log) opts.log(j);
  };
  auto fl = structural_flags(c);
  if (c.dim() != 4 || !fl.is_pseudomanifold || fl.has_boundary)
    throw PreconditionError("blowup expects a closed 4-pseudomanifold");
  if (v < 1 || v > c.vertex_count()) throw InvalidArgument("vertex out of range");

  const Complex lk = link(c, {v});
  std::vector<Vertex> lk_vertices;  // link index -> vertex of c
  for (const auto& f : star_facets(c, {v}))
    for (Vertex w : f)
      if (w != v) lk_vertices.push_back(w);
  std::sort(lk_vertices.begin(), lk_vertices.end());
  lk_vertices.erase(std::unique(lk_vertices.begin(), lk_vertices.end()), lk_vertices.end());

  log({{"phase", "check"}, {"vertex", v}, {"link_f", fjson(f_vector(lk))},
       {"link_homology", homology(lk)}});
  if (lk.dim() != 3 || homology(lk) != rp3_homology()) throw UnsupportedSingularity();

  // Reduce the link and keep every improvement as a matching target.
  struct Stage {
    std::vector<std::int64_t> f;
    Complex complex;
    std::size_t prefix = 0;
  };
  std::vector<Stage> stages{{f_vector(lk), lk, 0}};
  ReductionOptions lo = opts.reduction;
  lo.target.reset();
  lo.target_f.reset();
  detail::Reducer link_reducer(lk, lo);
  while (link_reducer.step()) {
    if (link_reducer.improved()) {
      stages.push_back({link_reducer.best_f(), link_reducer.best(), link_reducer.best_length()});
      log({{"phase", "reduce_link"}, {"f", fjson(link_reducer.best_f())}, {"moves", link_reducer.best_length()}});
    }
  }
  const std::vector<Move> link_log(link_reducer.log().begin(),
                                   link_reducer.log().begin() +
                                       static_cast<std::ptrdiff_t>(link_reducer.best_length()));

  Block block(rb.block);
  BlowupResult result;
  std::vector<std::vector<std::int64_t>> bd_raw;
  for (const auto& t : block.boundary()) bd_raw.emplace_back(t.begin(), t.end());
  const Complex bd = from_facets(bd_raw);
  log({{"phase", "map_boundaries"}, {"block_boundary_f", fjson(f_vector(bd))}, {"link_f", fjson(f_vector(lk))}});

  // Drive the block boundary towards one of the link stages.
  detail::ReducerHooks hooks;
  hooks.fresh_floor = block.next_id();
  hooks.allow = [&](const Move& m) {
    return static_cast<int>(m.a.size()) == 4 || !block.contains_face(m.b);
  };
  hooks.on_apply = [&](const Move& m) {
    Face s = m.a;
    s.insert(s.end(), m.b.begin(), m.b.end());
    if (m.a.size() == 4) block.reserve_id(m.b[0]);
    block.glue(std::move(s));
    ++result.glued;
  };
  ReductionOptions bo = opts.reduction;
  bo.target.reset();
  bo.target_f.reset();
  bo.seed = opts.reduction.seed + 1;
  detail::Reducer bd_reducer(bd, bo, hooks);

  std::optional<std::vector<Vertex>> match;  // boundary index -> stage index
  const Stage* matched = nullptr;
  auto try_match = [&]() {
    const auto& f = bd_reducer.state().f();
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
      if (it->f != f) continue;
      if (auto m = is_isomorphic(bd_reducer.current(), it->complex)) {
        match = std::move(m);
        matched = &*it;
        return true;
      }
    }
    return false;
  };
  bool found = try_match();
  while (!found && bd_reducer.step()) {
    if (bd_reducer.improved()) log({{"phase", "smaller_boundary"}, {"f", fjson(bd_reducer.best_f())}});
    found = try_match();
  }
  if (!found) throw BoundaryMatchError();
  log({{"phase", "boundaries_isomorphic"}, {"f", fjson(matched->f)}, {"rounds", bd_reducer.rounds()}});

  // psi: index in the current link stage -> block boundary id.
  const auto& live = bd_reducer.state().vertices();
  std::vector<Vertex> psi(live.size() + 1, 0);
  for (std::size_t i = 0; i < live.size(); ++i) psi[(*match)[i]] = live[i];

  // Walk the link log backwards from the matched stage to the link itself.
  std::vector<Complex> states{lk};
  for (std::size_t i = 0; i < matched->prefix; ++i) states.push_back(apply_move(states.back(), link_log[i]));
  auto map_face = [&](const Face& f) {
    Face g;
    for (Vertex x : f) g.push_back(psi[x]);
    return make_face(std::move(g));
  };
  auto add_collar = [&]() {
    auto copy = block.collar();
    for (std::size_t x = 1; x < psi.size(); ++x) psi[x] = copy.at(psi[x]);
    ++result.collars;
    log({{"phase", "collar"}, {"boundary_facets", block.boundary().size()}});
  };
  for (std::size_t i = matched->prefix; i-- > 0;) {
    const Move r = reverse_move(states[i], link_log[i]);  // acts on states[i + 1]
    if (r.a.size() == 4) {
      // Re-creates a vertex at index r.b[0] of states[i].
      const Vertex g = r.b[0];
      const Vertex id = block.fresh();
      Face s = map_face(r.a);
      s.push_back(id);
      block.glue(std::move(s));
      psi.insert(psi.begin() + g, id);
    } else {
      // b may already sit inside the block; subdividing it there frees the slot.
      if (const Face b = map_face(r.b); block.contains_face(b)) {
        block.subdivide(b);
        ++result.subdivisions;
      }
      Face s = map_face(r.a);
      for (Vertex x : map_face(r.b)) s.push_back(x);
      block.glue(std::move(s));
      if (r.a.size() == 1) psi.erase(psi.begin() + r.a[0]);
    }
    ++result.glued;
  }
  // A last collar makes the boundary a full subcomplex of the block, so gluing
  // along it cannot identify any other faces.
  add_collar();

  std::set<Face> expected;
  for (const auto& f : lk.facets()) expected.insert(map_face(f));
  if (expected != block.boundary()) throw BoundaryMatchError();

  // Assemble: facets away from v, then the block with boundary ids sent to c.
  std::map<Vertex, Vertex> to_c;
  for (std::size_t x = 1; x < psi.size(); ++x) to_c[psi[x]] = lk_vertices[x - 1];
  std::vector<Label> labels = c.labels();
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& f : c.facets())
    if (!std::binary_search(f.begin(), f.end(), v)) raw.emplace_back(f.begin(), f.end());
  std::map<Vertex, std::int64_t> interior;
  for (const auto& s : block.facets()) {
    std::vector<std::int64_t> g;
    for (Vertex x : s) {
      if (auto it = to_c.find(x); it != to_c.end()) {
        g.push_back(it->second);
        continue;
      }
      auto [it, added] = interior.try_emplace(x, 0);
      if (added) {
        labels.push_back(next_free_label(labels));
        it->second = static_cast<std::int64_t>(labels.size());
      }
      g.push_back(it->second);
    }
    raw.push_back(std::move(g));
  }
  const std::string name = c.name().empty() ? std::string{} : c.name() + " blown up at " + to_string(c.labels()[v - 1]);
  result.complex = from_facets(raw, labels).with_name(name);
  log({{"phase", "glued"}, {"f", fjson(f_vector(result.complex))}, {"collars", result.collars},
       {"subdivisions", result.subdivisions},
       {"glued_simplices", result.glued}});
  return result;
}

}  // namespace simplicia
