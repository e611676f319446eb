#include "simplicia/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "simplicia/errors.hpp"

namespace simplicia {

std::int64_t euler_characteristic(const Complex& c) {
  std::int64_t chi = 0;
  auto f = f_vector(c);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f[k];
  return chi;
}

namespace {
std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

HGVectors hg_vectors_from_f(std::span<const std::int64_t> f) {
  const int d = static_cast<int>(f.size()) - 1;
  auto fm = [&](int i) -> std::int64_t { return i == 0 ? 1 : f[i - 1]; };  // f_{i-1}, f_{-1} = 1
  HGVectors out;
  for (int k = 0; k <= d + 1; ++k) {
    std::int64_t hk = 0;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      hk += sign * binomial(d + 1 - i, k - i) * fm(i);
    }
    out.h.push_back(hk);
  }
  out.g.push_back(out.h[0]);
  for (int i = 1; i <= d + 1; ++i) out.g.push_back(out.h[i] - out.h[i - 1]);
  return out;
}

std::vector<std::int64_t> HGVectors::h_transcript() const { return {h.begin() + 1, h.end()}; }

std::vector<std::int64_t> HGVectors::g_transcript() const {
  const int d = static_cast<int>(h.size()) - 2;
  const int last = std::min(d / 2 + 1, static_cast<int>(g.size()) - 1);
  return {g.begin() + 1, g.begin() + 1 + last};
}

HGVectors hg_vectors(const Complex& c) {
  if (!c.is_pure()) throw PreconditionError("h-vector requires a pure complex");
  auto f = f_vector(c);
  return hg_vectors_from_f(f);
}

Orientation orientability(const Complex& c) {
  auto fl = structural_flags(c);
  if (!fl.is_pseudomanifold) throw PreconditionError("orientability requires a pseudomanifold");
  auto j = cached(c, "orientation", [&] {
    const auto& facets = c.facets();
    const int m = static_cast<int>(facets.size());
    Orientation out;
    out.orientable = true;
    std::vector<int> sign(m, 0);
    if (c.dim() <= 0) {
      // Every 0-dimensional complex is orientable; choose +1 everywhere.
      out.signs = std::vector<int>(m, 1);
      return nlohmann::json{{"orientable", true}, {"signs", *out.signs}};
    }
    // Ridge -> (facet, induced sign) pairs.
    std::unordered_map<Face, std::vector<std::pair<int, int>>, FaceHash> ridges;
    for (int i = 0; i < m; ++i) {
      const Face& f = facets[i];
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face r;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) r.push_back(f[t]);
        ridges[r].emplace_back(i, skip % 2 == 0 ? 1 : -1);
      }
    }
    std::vector<std::vector<std::pair<int, int>>> adj(m);  // (neighbor, required sign product)
    for (const auto& [r, inc] : ridges) {
      if (inc.size() != 2) continue;
      // sign_a * ind_a == -(sign_b * ind_b)  =>  sign_b = -sign_a * ind_a * ind_b
      const int rel = -inc[0].second * inc[1].second;
      adj[inc[0].first].emplace_back(inc[1].first, rel);
      adj[inc[1].first].emplace_back(inc[0].first, rel);
    }
    for (int start = 0; start < m && out.orientable; ++start) {
      if (sign[start]) continue;
      sign[start] = 1;
      std::deque<int> queue{start};
      while (!queue.empty() && out.orientable) {
        int a = queue.front();
        queue.pop_front();
        for (auto [b, rel] : adj[a]) {
          const int want = sign[a] * rel;
          if (!sign[b]) {
            sign[b] = want;
            queue.push_back(b);
          } else if (sign[b] != want) {
            out.orientable = false;
            break;
          }
        }
      }
    }
    nlohmann::json r{{"orientable", out.orientable}};
    if (out.orientable) r["signs"] = sign;
    return r;
  });
  Orientation o;
  o.orientable = j.at("orientable").get<bool>();
  if (j.contains("signs")) o.signs = j.at("signs").get<std::vector<int>>();
  return o;
}

GroupPresentation fundamental_group_presentation(const Complex& c) {
  if (c.empty() || !structural_flags(c).is_connected) {
    throw PreconditionError("fundamental group requires a connected complex");
  }
  const int n = c.vertex_count();
  auto edges = faces(c, 1);
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::map<Face, bool> in_tree;
  std::vector<char> seen(n + 1, 0);
  std::deque<Vertex> queue{1};
  seen[1] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[make_face({u, w})] = true;
      queue.push_back(w);
    }
  }
  std::map<Face, int> generator;
  GroupPresentation p;
  for (const auto& e : edges) {
    if (!in_tree.count(e)) generator[e] = ++p.generator_count;
  }
  auto letter = [&](Vertex a, Vertex b, std::vector<int>& word) {
    // Edge traversed from a to b; generators are oriented from smaller to larger vertex.
    auto it = generator.find(make_face({a, b}));
    if (it == generator.end()) return;
    word.push_back(a < b ? it->second : -it->second);
  };
  for (const auto& t : faces(c, 2)) {
    std::vector<int> word;
    letter(t[0], t[1], word);
    letter(t[1], t[2], word);
    letter(t[2], t[0], word);
    p.relators.push_back(std::move(word));
  }
  return p;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int letter : p.relators[r]) {
      const int g = letter > 0 ? letter : -letter;
      if (g < 1 || g > p.generator_count) throw InvalidArgument("relator uses an unknown generator");
      m.add(static_cast<int>(r), g - 1, letter > 0 ? 1 : -1);
    }
  }
  auto snf = smith_normal_form(m);
  HomologyGroup out;
  out.betti = p.generator_count - snf.rank;
  for (const auto& f : snf.invariant_factors)
    if (f > 1) out.torsion.push_back(static_cast<std::int64_t>(f));
  return out;
}

}  // namespace simplicia
