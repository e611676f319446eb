#include "simplicia/generators.hpp"

#include <algorithm>
#include <numeric>

#include "simplicia/errors.hpp"
#include "simplicia/rng.hpp"

namespace simplicia {

namespace {

// Calls fn(subset) for every k-subset of 1..n in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  Face s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    fn(s);
    int t = k - 1;
    while (t >= 0 && s[t] == n - k + t + 1) --t;
    if (t < 0) return;
    ++s[t];
    for (int u = t + 1; u < k; ++u) s[u] = s[u - 1] + 1;
  }
}

Complex from_indexed(std::vector<Face> facets, int n, std::string name) {
  std::sort(facets.begin(), facets.end());
  std::vector<Label> labels;
  for (int v = 1; v <= n; ++v) labels.emplace_back(std::int64_t{v});
  return Complex(std::move(facets), std::move(labels), std::move(name));
}

}  // namespace

Complex simplex(int d) {
  if (d < 0) throw InvalidArgument("dimension must be non-negative");
  Face f(d + 1);
  std::iota(f.begin(), f.end(), 1);
  return from_indexed({f}, d + 1, "Delta^" + std::to_string(d));
}

Complex boundary_simplex(int d) {
  if (d < 1) throw InvalidArgument("boundary of a simplex needs d >= 1");
  std::vector<Face> facets;
  for_each_subset(d + 1, d, [&](const Face& s) { facets.push_back(s); });
  return from_indexed(std::move(facets), d + 1, "Bd(Delta^" + std::to_string(d) + ")");
}

Complex cross_polytope(int d) {
  if (d < 1) throw InvalidArgument("cross polytope needs d >= 1");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    Face f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + 1 + ((mask >> i) & 1u));
    facets.push_back(std::move(f));
  }
  return from_indexed(std::move(facets), 2 * d, "Bd(beta^" + std::to_string(d) + ")");
}

bool gale_evenness(const Face& facet, int n) {
  std::vector<char> in(n + 2, 0);
  for (Vertex v : facet) in[v] = 1;
  // Between any two consecutive non-members the run of members must be even.
  int run = 0;
  bool seen_gap = false;
  for (int v = 1; v <= n; ++v) {
    if (in[v]) {
      ++run;
    } else {
      if (seen_gap && run % 2 != 0) return false;
      seen_gap = true;
      run = 0;
    }
  }
  return true;
}

Complex cyclic_polytope_boundary(int d, int n) {
  if (d < 2) throw InvalidArgument("cyclic polytope needs d >= 2");
  if (n < d + 2) throw InvalidArgument("cyclic polytope needs n >= d+2");
  std::vector<Face> facets;
  for_each_subset(n, d, [&](const Face& s) {
    if (gale_evenness(s, n)) facets.push_back(s);
  });
  return from_indexed(std::move(facets), n,
                      "Bd(C_" + std::to_string(d) + "(" + std::to_string(n) + "))");
}

Complex stacked_sphere(int d, int n, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("stacked sphere needs d >= 1");
  if (n < d + 2) throw InvalidArgument("stacked sphere needs n >= d+2");
  std::vector<Face> facets = boundary_simplex(d + 1).facets();
  Rng rng(seed);
  for (int v = d + 3; v <= n; ++v) {
    const std::size_t pick = rng.index(facets.size());
    Face old = facets[pick];
    facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
    for (std::size_t skip = 0; skip < old.size(); ++skip) {
      Face f;
      for (std::size_t t = 0; t < old.size(); ++t)
        if (t != skip) f.push_back(old[t]);
      f.push_back(v);
      facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
  }
  return from_indexed(std::move(facets), n,
                      "stacked S^" + std::to_string(d) + "_" + std::to_string(n) + " (seed " +
                          std::to_string(seed) + ")");
}

Complex generate(const SeriesSpec& spec) {
  switch (spec.family) {
    case Family::simplex:
      return simplex(spec.d);
    case Family::boundary_simplex:
      return boundary_simplex(spec.d);
    case Family::cross_polytope:
      return cross_polytope(spec.d);
    case Family::cyclic_boundary:
      return cyclic_polytope_boundary(spec.d, spec.n);
    case Family::stacked_sphere:
      return stacked_sphere(spec.d, spec.n, spec.seed);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace simplicia
