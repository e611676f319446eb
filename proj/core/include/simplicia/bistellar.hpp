#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicia/complex.hpp"

namespace simplicia {

/// Bistellar move replacing a * ∂b by ∂a * b, with |a| + |b| = d + 2.
///
/// For a facet move (a a facet) `b` holds the single index the new vertex
/// will receive; vertices at or above it shift up by one. valid_moves() always
/// proposes n+1. `fresh_label` overrides the new vertex's label.
struct Move {
  Face a;
  Face b;
  std::optional<Label> fresh_label;

  int dim_class() const noexcept { return static_cast<int>(a.size()) - 1; }

  friend bool operator==(const Move& x, const Move& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Move& x, const Move& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

void to_json(nlohmann::json& j, const Move& m);
void from_json(const nlohmann::json& j, Move& m);

/// All valid moves of a pure complex, sorted by (a, b). `dim_class`
/// restricts to moves with dim(a) == dim_class.
std::vector<Move> valid_moves(const Complex& c, std::optional<int> dim_class = std::nullopt);

bool is_valid_move(const Complex& c, const Move& m);

/// Throws MoveNotApplicable for an invalid move.
Complex apply_move(const Complex& c, const Move& m);

/// The move that undoes `m`, expressed on apply_move(before, m).
Move reverse_move(const Complex& before, const Move& m);

/// Change of (f_0..f_d) caused by a move of the given shape.
std::vector<std::int64_t> move_f_delta(int d, std::size_t a_size, std::size_t b_size);

struct RandomizeResult {
  Complex complex;
  std::vector<Move> moves;  // in the indexing current at each step
  int applied = 0;
};

/// Applies up to n_moves moves, each chosen uniformly among the valid ones
/// (facet moves included). Stops early when no move is valid.
RandomizeResult randomize(const Complex& c, int n_moves, std::uint64_t seed);

/// Replays a move log; throws MoveNotApplicable at the first invalid move.
Complex replay(const Complex& c, const std::vector<Move>& moves);

/// Next label for a newly created vertex: max integer label + 1, or "v<n+1>"
/// when labels are not all integers.
Label next_free_label(const std::vector<Label>& labels);

}  // namespace simplicia
