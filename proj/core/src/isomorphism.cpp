#include "simplicia/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace simplicia {

namespace {

using Signature = std::vector<std::int64_t>;

struct Side {
  const Complex* c = nullptr;
  int n = 0;
  std::vector<std::vector<Vertex>> adj;
  std::vector<std::vector<int>> adjacent;  // facets containing the edge
  std::vector<int> colour;
};

Side prepare(const Complex& c) {
  Side s;
  s.c = &c;
  s.n = c.vertex_count();
  s.adj.assign(s.n + 1, {});
  s.adjacent.assign(s.n + 1, std::vector<int>(s.n + 1, 0));
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        ++s.adjacent[f[i]][f[j]];
        ++s.adjacent[f[j]][f[i]];
      }
  }
  for (int u = 1; u <= s.n; ++u)
    for (int w = 1; w <= s.n; ++w)
      if (s.adjacent[u][w]) s.adj[u].push_back(w);
  return s;
}

Signature initial_signature(const Complex& c, Vertex v) {
  Signature sig;
  sig.push_back(static_cast<std::int64_t>(c.facets_of_vertex(v).size()));
  std::map<std::size_t, std::int64_t> sizes;  // facet sizes around v (impure input)
  for (int i : c.facets_of_vertex(v)) ++sizes[c.facets()[i].size()];
  for (auto [k, m] : sizes) {
    sig.push_back(static_cast<std::int64_t>(k));
    sig.push_back(m);
  }
  sig.push_back(-1);
  auto lk = link(c, {v});
  for (auto x : f_vector(lk)) sig.push_back(x);
  return sig;
}

// Refines both colourings with a shared signature table so colours are comparable.
void refine(Side& a, Side& b) {
  std::map<Signature, int> table;
  auto assign = [&](Side& s, std::vector<Signature>& sigs) {
    s.colour.assign(s.n + 1, -1);
    for (int v = 1; v <= s.n; ++v) s.colour[v] = table.emplace(sigs[v], static_cast<int>(table.size())).first->second;
  };
  std::vector<Signature> sa(a.n + 1), sb(b.n + 1);
  for (int v = 1; v <= a.n; ++v) sa[v] = initial_signature(*a.c, v);
  for (int v = 1; v <= b.n; ++v) sb[v] = initial_signature(*b.c, v);
  assign(a, sa);
  assign(b, sb);
  auto classes = [](const Side& s) {
    std::unordered_set<int> u(s.colour.begin() + 1, s.colour.end());
    return u.size();
  };
  std::size_t count = classes(a);
  for (;;) {
    table.clear();
    auto next = [](const Side& s) {
      std::vector<Signature> sig(s.n + 1);
      for (int v = 1; v <= s.n; ++v) {
        Signature x{s.colour[v]};
        Signature nb;
        for (Vertex w : s.adj[v]) nb.push_back(static_cast<std::int64_t>(s.colour[w]) * (s.c->facet_count() + 1) + s.adjacent[v][w]);
        std::sort(nb.begin(), nb.end());
        x.insert(x.end(), nb.begin(), nb.end());
        sig[v] = std::move(x);
      }
      return sig;
    };
    sa = next(a);
    sb = next(b);
    assign(a, sa);
    assign(b, sb);
    const std::size_t now = classes(a);
    if (now == count) break;
    count = now;
  }
}

class Matcher {
 public:
  Matcher(const Side& a, const Side& b) : a_(a), b_(b) {
    for (const auto& f : b.c->facets()) facets_b_.insert(f);
    order_vertices();
    map_.assign(a.n + 1, 0);
    used_.assign(b.n + 1, 0);
    // Facets of a to check once the last of their vertices (in search order) is mapped.
    std::vector<int> pos(a.n + 1);
    for (int i = 0; i < a.n; ++i) pos[order_[i]] = i;
    closing_.assign(a.n, {});
    for (std::size_t i = 0; i < a.c->facets().size(); ++i) {
      int last = 0;
      for (Vertex v : a.c->facets()[i]) last = std::max(last, pos[v]);
      closing_[last].push_back(static_cast<int>(i));
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (!search(0)) return std::nullopt;
    return std::vector<Vertex>(map_.begin() + 1, map_.end());
  }

 private:
  const Side& a_;
  const Side& b_;
  std::unordered_set<Face, FaceHash> facets_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<std::vector<int>> closing_;

  // Rarest colour first, then grow along edges so adjacency checks bite early.
  void order_vertices() {
    std::map<int, int> freq;
    for (int v = 1; v <= a_.n; ++v) ++freq[a_.colour[v]];
    std::vector<char> placed(a_.n + 1, 0);
    auto better = [&](Vertex x, Vertex y) {
      auto kx = std::make_pair(freq[a_.colour[x]], x);
      auto ky = std::make_pair(freq[a_.colour[y]], y);
      return kx < ky;
    };
    std::vector<int> touch(a_.n + 1, 0);
    while (static_cast<int>(order_.size()) < a_.n) {
      Vertex pick = 0;
      for (int v = 1; v <= a_.n; ++v) {
        if (placed[v]) continue;
        if (!pick || touch[v] > touch[pick] || (touch[v] == touch[pick] && better(v, pick))) pick = v;
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (Vertex w : a_.adj[pick]) ++touch[w];
    }
  }

  bool consistent(int depth, Vertex v, Vertex w) const {
    if (a_.adj[v].size() != b_.adj[w].size()) return false;
    for (int i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      if (a_.adjacent[v][u] != b_.adjacent[w][map_[u]]) return false;
    }
    return true;
  }

  bool facets_ok(int depth) const {
    Face img;
    for (int fi : closing_[depth]) {
      img.clear();
      for (Vertex v : a_.c->facets()[fi]) img.push_back(map_[v]);
      std::sort(img.begin(), img.end());
      if (!facets_b_.count(img)) return false;
    }
    return true;
  }

  bool search(int depth) {
    if (depth == a_.n) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 1; w <= b_.n; ++w) {
      if (used_[w] || b_.colour[w] != a_.colour[v]) continue;
      if (!consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (facets_ok(depth) && search(depth + 1)) return true;
      used_[w] = 0;
      map_[v] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Complex& a, const Complex& b, const std::vector<Vertex>& map) {
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
  if (static_cast<int>(map.size()) != a.vertex_count()) return false;
  std::vector<char> hit(b.vertex_count() + 1, 0);
  for (Vertex w : map) {
    if (w < 1 || w > b.vertex_count() || hit[w]) return false;
    hit[w] = 1;
  }
  for (const auto& f : a.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(map[v - 1]);
    std::sort(g.begin(), g.end());
    if (!std::binary_search(b.facets().begin(), b.facets().end(), g)) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> is_isomorphic(const Complex& a, const Complex& b) {
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return std::nullopt;
  if (a.empty()) return std::vector<Vertex>{};
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  Side sa = prepare(a);
  Side sb = prepare(b);
  refine(sa, sb);
  auto histogram = [](const Side& s) {
    std::vector<int> h(s.colour.begin() + 1, s.colour.end());
    std::sort(h.begin(), h.end());
    return h;
  };
  if (histogram(sa) != histogram(sb)) return std::nullopt;
  return Matcher(sa, sb).run();
}

}  // namespace simplicia
