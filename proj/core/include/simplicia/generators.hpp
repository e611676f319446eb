#pragma once

#include <cstdint>

#include "simplicia/complex.hpp"

namespace simplicia {

enum class Family { simplex, boundary_simplex, cross_polytope, cyclic_boundary, stacked_sphere };

struct SeriesSpec {
  Family family = Family::simplex;
  int d = 0;
  int n = 0;
  std::uint64_t seed = 0;
};

/// Single d-simplex on 1..d+1.
Complex simplex(int d);

/// All d-subsets of 1..d+1.
Complex boundary_simplex(int d);

/// Boundary of the d-dimensional cross polytope: antipodal pairs (2i-1, 2i).
Complex cross_polytope(int d);

/// Boundary of the cyclic d-polytope on n vertices, from Gale's evenness condition.
Complex cyclic_polytope_boundary(int d, int n);

/// True if the d-subset `facet` of 1..n satisfies Gale's evenness condition.
bool gale_evenness(const Face& facet, int n);

/// Stacked d-sphere on n vertices, stacking facets chosen by the seeded RNG.
Complex stacked_sphere(int d, int n, std::uint64_t seed);

Complex generate(const SeriesSpec& spec);

}  // namespace simplicia
