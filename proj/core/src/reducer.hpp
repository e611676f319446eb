#pragma once

#include <functional>
#include <vector>

#include "mutable_triangulation.hpp"
#include "simplicia/reduction.hpp"
#include "simplicia/rng.hpp"

namespace simplicia::detail {

struct ReducerHooks {
  /// Vetoes candidate moves (given in id space).
  std::function<bool(const Move&)> allow;
  /// Called after a move is applied (id space; facet moves carry the new id in b).
  std::function<void(const Move&)> on_apply;
  /// New vertices get ids at or above this value.
  Vertex fresh_floor = 0;
};

class Reducer {
 public:
  Reducer(const Complex& c, const ReductionOptions& opts, ReducerHooks hooks = {});

  /// Performs one round. Returns false once finished (converged, stuck or out of rounds).
  bool step();

  bool finished() const noexcept { return finished_; }
  bool converged() const noexcept { return converged_; }
  bool improved() const noexcept { return improved_; }
  int rounds() const noexcept { return rounds_; }

  const MutableTriangulation& state() const noexcept { return t_; }
  Complex current() const;
  const Complex& best() const noexcept { return best_; }
  const std::vector<std::int64_t>& best_f() const noexcept { return best_f_; }

  /// Moves in Complex indexing; the first best_length() of them lead to best().
  const std::vector<Move>& log() const noexcept { return log_; }
  std::size_t best_length() const noexcept { return best_len_; }

  ReductionResult result() const;

 private:
  MutableTriangulation t_;
  ReductionOptions opts_;
  ReducerHooks hooks_;
  Rng rng_;
  std::string name_;
  Vertex next_fresh_;
  int rounds_ = 0;
  int stall_ = 0;
  bool finished_ = false;
  bool converged_ = false;
  bool improved_ = false;
  std::vector<std::int64_t> best_f_;
  Complex best_;
  std::size_t best_len_ = 0;
  std::vector<Move> log_;

  void apply(const Move& m);
  bool at_goal();
};

}  // namespace simplicia::detail
