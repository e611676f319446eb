#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicia/complex.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/reduction.hpp"

namespace simplicia {

/// Compact 4-manifold with boundary RP^3 and b_2 = 1, glued in at a blowup.
struct ResolutionBlock {
  Complex block;
  std::string boundary_type = "RP^3";
  std::string provenance;
};

/// Throws PreconditionError unless the block is a pure, strongly connected
/// 4-complex whose boundary is a closed 3-pseudomanifold with RP^3 homology
/// and whose own degree-2 Betti number is 1.
void validate_block(const ResolutionBlock& b);

/// Reduced homology of RP^3: (0,[]),(0,[2]),(0,[]),(1,[]).
HomologyProfile rp3_homology();

struct SingularVertex {
  Vertex vertex = 0;
  HomologyProfile link_homology;
  /// Link has sphere homology but could not be certified within budget.
  bool suspect = false;
};

/// Vertices of a closed 4-pseudomanifold whose links are not certified PL 3-spheres.
std::vector<SingularVertex> singular_vertices(const Complex& c, const ReductionOptions& opts = {});

/// True if link(c, v) is certified bistellarly equivalent to `rp3`.
bool is_ordinary_double_point(const Complex& c, Vertex v, const Complex& rp3, const ReductionOptions& opts = {});

struct BlowupOptions {
  ReductionOptions reduction;
  /// Receives one JSON object per log event ({"phase": ..., ...}).
  std::function<void(const nlohmann::json&)> log;
};

struct BlowupResult {
  Complex complex;
  /// Collars added while realizing the boundary moves (including the final one).
  int collars = 0;
  int subdivisions = 0;
  /// Simplices glued onto the block during boundary matching.
  int glued = 0;
};

/// Excises star(v) and glues in the block along an isomorphism between its
/// (modified) boundary and link(v). The block boundary is driven towards the
/// link by bistellar moves, each realized by gluing a 4-simplex onto the
/// block; the complement of the star is never modified.
///
/// Throws UnsupportedSingularity if link(v) does not have RP^3 homology and
/// BoundaryMatchError if the boundaries cannot be matched within budget.
BlowupResult blowup(const Complex& c, Vertex v, const ResolutionBlock& block, const BlowupOptions& opts = {});

}  // namespace simplicia
