#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simplicia/bistellar.hpp"
#include "simplicia/complex.hpp"

namespace simplicia {

struct ReductionOptions {
  int rounds = 5000;
  /// Non-improving rounds at a local minimum before a relaxation phase.
  int heating = 50;
  /// Random non-reducing moves per relaxation phase.
  int relaxation = 15;
  std::uint64_t seed = 0;
  /// Stop as soon as the current complex is isomorphic to `target`.
  std::optional<Complex> target;
  /// Stop as soon as the current f-vector equals `target_f`.
  std::optional<std::vector<std::int64_t>> target_f;
};

struct ReductionResult {
  Complex complex;          // best complex found
  std::vector<Move> moves;  // replays the input onto `complex`
  bool converged = false;   // reached the boundary of a simplex or the target
  int rounds_used = 0;
};

/// Heuristic reduction by bistellar moves.
///
/// Moves that lower (f_d, ..., f_0) lexicographically are taken greedily,
/// lowest dimension class first and lowest (a, b) within it. At a local
/// minimum one random non-reducing move is made; after `heating` such rounds
/// without a new best, `relaxation` random non-reducing moves are made in a
/// row. Deterministic per seed.
ReductionResult reduce(const Complex& c, const ReductionOptions& opts = {});

/// True if the reversed f-vector of `x` is lexicographically smaller than that of `y`.
bool reversed_f_less(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y);

struct EquivalenceResult {
  /// true is a certificate; false means "not established", never a proof.
  bool established = false;
  /// Why the answer is false: "dimension", "homology" or "budget".
  std::string reason;
  int rounds_used = 0;
};

/// Reduces both complexes side by side (seeds s and s+1) and compares the
/// trajectories for isomorphism whenever their f-vectors meet.
EquivalenceResult bistellarly_equivalent(const Complex& a, const Complex& b,
                                         const ReductionOptions& opts = {});

enum class ManifoldStatus { manifold, not_manifold, unknown };

const char* to_string(ManifoldStatus s);

/// Whether the link of `v` is a PL sphere: direct checks up to dimension 2,
/// homology then bistellar reduction to the simplex boundary above.
ManifoldStatus vertex_link_status(const Complex& c, Vertex v, const ReductionOptions& opts = {});

/// manifold if every vertex link certifies as a PL sphere, not_manifold if
/// some link is not a homology sphere, unknown when a reduction runs out of budget.
ManifoldStatus is_combinatorial_manifold(const Complex& c, const ReductionOptions& opts = {});

}  // namespace simplicia
