#include "simplicia/operations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "simplicia/bistellar.hpp"
#include "simplicia/errors.hpp"

namespace simplicia {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (Vertex v : image_) {
    if (v < 1 || v > n || seen[v]) throw InvalidArgument("generator is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> used(n + 1, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex v = cyc[i];
      if (v < 1 || v > n || used[v]) throw InvalidArgument("generator is not a bijection");
      used[v] = 1;
      image[v - 1] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(image));
}

Complex from_generators(const std::vector<Face>& generator_facets,
                        const std::vector<Permutation>& group_gens) {
  if (generator_facets.empty()) throw InvalidArgument("no facets");
  std::set<Face> orbit;
  std::deque<Face> queue;
  for (const auto& g : generator_facets) {
    Face f = make_face(g);
    if (f.empty() || f.front() < 1) throw InvalidArgument("bad vertex");
    for (const auto& p : group_gens) {
      if (f.back() > p.size()) throw InvalidArgument("generator acts on fewer vertices than the facets use");
    }
    if (orbit.insert(f).second) queue.push_back(f);
  }
  while (!queue.empty()) {
    Face f = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : group_gens) {
      Face g;
      g.reserve(f.size());
      for (Vertex v : f) g.push_back(p(v));
      g = make_face(std::move(g));
      if (orbit.insert(g).second) queue.push_back(std::move(g));
    }
  }
  std::vector<std::vector<std::int64_t>> raw;
  raw.reserve(orbit.size());
  for (const auto& f : orbit) raw.emplace_back(f.begin(), f.end());
  return from_facets(raw);
}

Complex join(const Complex& a, const Complex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int shift = a.vertex_count();
  std::vector<Face> facets;
  facets.reserve(a.facet_count() * b.facet_count());
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) {
      Face h = f;
      for (Vertex v : g) h.push_back(v + shift);
      facets.push_back(std::move(h));
    }
  }
  std::sort(facets.begin(), facets.end());
  std::vector<Label> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return Complex(std::move(facets), std::move(labels));
}


Complex cone(const Complex& c) {
  Complex apex({{1}}, {next_free_label(c.labels())});
  return join(c, apex);
}

Complex suspension(const Complex& c) {
  auto labels = c.labels();
  Label first = next_free_label(labels);
  labels.push_back(first);
  Label second = next_free_label(labels);
  Complex poles({{1}, {2}}, {first, second});
  return join(c, poles);
}

Complex cartesian_product(const Complex& a, const Complex& b) {
  if (!a.is_pure() || !b.is_pure()) throw PreconditionError("cartesian product requires pure factors");
  if (a.empty() || b.empty()) return Complex();
  const int nb = b.vertex_count();
  auto index = [nb](Vertex u, Vertex w) { return (u - 1) * nb + w; };
  std::set<Face> facets;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) {
      const int p = static_cast<int>(f.size()) - 1;
      const int q = static_cast<int>(g.size()) - 1;
      // Lattice paths from (0,0) to (p,q): choose which of the p+q steps move in the first factor.
      std::vector<char> steps(p + q, 0);
      std::fill(steps.begin(), steps.begin() + p, 1);
      std::sort(steps.begin(), steps.end());
      do {
        Face s;
        int i = 0, j = 0;
        s.push_back(index(f[i], g[j]));
        for (char step : steps) {
          if (step) ++i;
          else ++j;
          s.push_back(index(f[i], g[j]));
        }
        facets.insert(make_face(std::move(s)));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(a.vertex_count()) * nb);
  for (int u = 1; u <= a.vertex_count(); ++u)
    for (int w = 1; w <= nb; ++w)
      labels.emplace_back("(" + to_string(a.labels()[u - 1]) + "," + to_string(b.labels()[w - 1]) + ")");
  std::vector<Face> faces(facets.begin(), facets.end());
  // Every vertex pair occurs when both factors have no isolated gaps, so the
  // vertex set is already 1..na*nb; compact defensively anyway.
  Complex raw(std::move(faces), std::move(labels));
  std::vector<Face> all = raw.facets();
  return subcomplex_from_faces(raw, std::move(all));
}

namespace {

void require_closed_pm(const Complex& c) {
  auto fl = structural_flags(c);
  if (!fl.is_pure || !fl.is_pseudomanifold || fl.has_boundary || c.empty()) {
    throw PreconditionError("expected a closed pseudomanifold");
  }
}

std::vector<std::int64_t> to_raw(const Face& f) { return {f.begin(), f.end()}; }

}  // namespace

Complex connected_sum(const Complex& a, const Complex& b) {
  require_closed_pm(a);
  require_closed_pm(b);
  if (a.dim() != b.dim()) throw InvalidArgument("dimension mismatch");
  const Face& fa = a.facets().front();
  const Face& fb = b.facets().front();
  const int na = a.vertex_count();

  std::vector<std::int64_t> map_b(b.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < fb.size(); ++i) map_b[fb[i]] = fa[i];
  std::int64_t next = na;
  std::vector<Label> labels = a.labels();
  for (int v = 1; v <= b.vertex_count(); ++v) {
    if (map_b[v] == 0) {
      map_b[v] = ++next;
      labels.push_back(b.labels()[v - 1]);
    }
  }
  std::vector<std::vector<std::int64_t>> raw;
  for (std::size_t i = 1; i < a.facet_count(); ++i) raw.push_back(to_raw(a.facets()[i]));
  for (std::size_t i = 1; i < b.facet_count(); ++i) {
    std::vector<std::int64_t> f;
    for (Vertex v : b.facets()[i]) f.push_back(map_b[v]);
    raw.push_back(std::move(f));
  }
  auto name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "#" + b.name();
  return from_facets(raw, labels).with_name(name);
}

Complex handle_addition(const Complex& c, const Face& facet1, const Face& facet2) {
  require_closed_pm(c);
  const auto& facets = c.facets();
  if (!std::binary_search(facets.begin(), facets.end(), facet1) ||
      !std::binary_search(facets.begin(), facets.end(), facet2)) {
    throw InvalidArgument("handle addition needs two facets of the complex");
  }
  auto closed_star = [&](Vertex v) {
    std::unordered_set<Vertex> s;
    for (int i : c.facets_of_vertex(v)) s.insert(facets[i].begin(), facets[i].end());
    return s;
  };
  for (Vertex u : facet1) {
    auto su = closed_star(u);
    for (Vertex w : facet2) {
      for (Vertex x : closed_star(w)) {
        if (su.count(x)) throw InvalidArgument("vertex stars of the two facets are not disjoint");
      }
    }
  }
  std::vector<std::int64_t> map(c.vertex_count() + 1);
  std::iota(map.begin(), map.end(), 0);
  for (std::size_t i = 0; i < facet2.size(); ++i) map[facet2[i]] = facet1[i];
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& f : facets) {
    if (f == facet1 || f == facet2) continue;
    std::vector<std::int64_t> g;
    for (Vertex v : f) g.push_back(map[v]);
    raw.push_back(std::move(g));
  }
  return from_facets(raw, c.labels());
}

Complex stellar_subdivision(const Complex& c, const Face& face) {
  if (!c.contains_face(face)) throw InvalidArgument("not a face");
  const Vertex w = c.vertex_count() + 1;
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (!is_subface(face, f)) {
      facets.push_back(f);
      continue;
    }
    for (Vertex x : face) {
      Face g;
      for (Vertex y : f)
        if (y != x) g.push_back(y);
      g.push_back(w);
      facets.push_back(std::move(g));
    }
  }
  std::sort(facets.begin(), facets.end());
  auto labels = c.labels();
  labels.push_back(next_free_label(labels));
  return Complex(std::move(facets), std::move(labels), c.name());
}

}  // namespace simplicia
