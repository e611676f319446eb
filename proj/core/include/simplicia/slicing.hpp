#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicia/complex.hpp"

namespace simplicia {

struct VertexPartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

/// "1,3,5/2,4,6"
VertexPartition parse_partition(const std::string& text);

/// Discrete normal surface cut out of a 3-manifold by a vertex bipartition.
///
/// Vertex i (1-based) sits on the ambient edge vertices[i-1] = (u, w), u < w,
/// labelled "u-w" with the ambient labels. Quads are cyclically ordered so
/// that opposite corners lie on disjoint ambient edges.
struct NormalSurface {
  std::string name;
  std::vector<std::pair<Vertex, Vertex>> vertices;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 4>> quads;

  /// [#vertices, #edges, #triangles, #quads]
  std::vector<std::int64_t> f_vector() const;
  std::int64_t euler_characteristic() const;
};

void to_json(nlohmann::json& j, const NormalSurface& ns);
void from_json(const nlohmann::json& j, NormalSurface& ns);

/// Throws InvalidArgument("only 3-manifold slicings supported") unless c is a
/// closed 3-pseudomanifold, and InvalidArgument for a bad partition.
NormalSurface slicing(const Complex& c, const VertexPartition& p);

/// Keeps triangles and splits each quad along the diagonal through its
/// smallest vertex (the lexicographically smallest ambient edge).
Complex ns_triangulation(const NormalSurface& ns);

struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int components = 0;
  std::int64_t chi = 0;
  /// "S^2", "T^2", "(T^2)#g", "RP^2", "(RP^2)#g"; components joined by " + ".
  std::string descriptor;
};

/// Classifies a closed surface. Throws PreconditionError if the triangulated
/// surface is not closed.
SurfaceType surface_type(const NormalSurface& ns);
SurfaceType surface_type(const Complex& surface);

}  // namespace simplicia
