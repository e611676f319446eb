#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplicia/complex.hpp"
#include "simplicia/homology.hpp"

namespace simplicia {

std::int64_t euler_characteristic(const Complex& c);

struct HGVectors {
  std::vector<std::int64_t> h;  // h_0 .. h_{d+1}
  std::vector<std::int64_t> g;  // g_0 = h_0, g_i = h_i - h_{i-1} for i = 1..d+1

  /// h_1 .. h_{d+1}, the form printed as "H=[...]".
  std::vector<std::int64_t> h_transcript() const;
  /// g_1 .. g_{floor(d/2)+1}, the form printed as "G=[...]".
  std::vector<std::int64_t> g_transcript() const;
};

/// h- and g-vector of a pure d-complex from its f-vector.
HGVectors hg_vectors(const Complex& c);
HGVectors hg_vectors_from_f(std::span<const std::int64_t> f);

struct Orientation {
  bool orientable = false;
  /// +1/-1 per facet (same order as facets()) when orientable.
  std::optional<std::vector<int>> signs;
};

/// Propagates facet orientations across ridges. Requires a pseudomanifold
/// (boundary allowed); each strongly connected component is oriented separately.
Orientation orientability(const Complex& c);

/// Words are lists of signed 1-based generator indices.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
};

/// Edge-path presentation: generators are the edges outside a breadth-first
/// spanning tree rooted at vertex 1 (numbered in lexicographic edge order);
/// one relator per triangle. Throws PreconditionError for disconnected input.
GroupPresentation fundamental_group_presentation(const Complex& c);

/// Abelianization as a rank plus torsion coefficients.
HomologyGroup abelianization(const GroupPresentation& p);

}  // namespace simplicia
