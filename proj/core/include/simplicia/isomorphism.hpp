#pragma once

#include <optional>
#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

/// A vertex bijection mapping the facets of `a` onto the facets of `b`, as
/// `map[v-1]` = image of v; nullopt when none exists.
///
/// Vertices are first coloured by degree and link f-vector, the colouring is
/// refined along edges, and the remaining ambiguity is resolved by
/// backtracking with facet checks.
std::optional<std::vector<Vertex>> is_isomorphic(const Complex& a, const Complex& b);

/// True if `map` sends the facet set of `a` onto that of `b`.
bool is_isomorphism(const Complex& a, const Complex& b, const std::vector<Vertex>& map);

}  // namespace simplicia
