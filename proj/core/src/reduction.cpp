#include "simplicia/reduction.hpp"

#include <algorithm>

#include "reducer.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/isomorphism.hpp"
#include "simplicia/operations.hpp"

namespace simplicia {

bool reversed_f_less(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

namespace detail {

Reducer::Reducer(const Complex& c, const ReductionOptions& opts, ReducerHooks hooks)
    : t_(c), opts_(opts), hooks_(std::move(hooks)), rng_(opts.seed), name_(c.name()) {
  if (!c.is_pure()) throw PreconditionError("reduction requires a pure complex");
  if (opts.rounds <= 0) throw InvalidArgument("rounds must be positive");
  next_fresh_ = std::max(c.vertex_count() + 1, hooks_.fresh_floor);
  best_f_ = t_.f();
  best_ = c;
  if (c.dim() < 1 || at_goal()) finished_ = true;
}

Complex Reducer::current() const { return t_.to_complex().with_name(name_); }

void Reducer::apply(const Move& m) {
  const bool facet_move = static_cast<int>(m.a.size()) == t_.dim() + 1;
  log_.push_back(t_.to_indices(m));
  t_.apply(m, facet_move ? next_free_label(t_.current_labels()) : Label{});
  if (facet_move) ++next_fresh_;
  if (hooks_.on_apply) hooks_.on_apply(m);
}

bool Reducer::at_goal() {
  const int d = t_.dim();
  bool goal = static_cast<int>(t_.vertex_count()) == d + 2 && static_cast<int>(t_.facet_count()) == d + 2;
  if (!goal && opts_.target_f) goal = t_.f() == *opts_.target_f;
  if (!goal && opts_.target && t_.f() == f_vector(*opts_.target)) goal = is_isomorphic(current(), *opts_.target).has_value();
  if (goal) {
    converged_ = true;
    if (best_f_ != t_.f() || best_len_ != log_.size()) {
      best_f_ = t_.f();
      best_ = current();
      best_len_ = log_.size();
      improved_ = true;
    }
  }
  return goal;
}

bool Reducer::step() {
  improved_ = false;
  if (finished_) return false;
  if (rounds_ >= opts_.rounds) {
    finished_ = true;
    return false;
  }
  ++rounds_;
  const int d = t_.dim();
  auto candidates = [&] {
    auto moves = t_.valid_moves(true, next_fresh_);
    if (hooks_.allow) std::erase_if(moves, [&](const Move& m) { return !hooks_.allow(m); });
    return moves;
  };
  // Non-reducing moves of the lowest available class: flat (2i = d) first, then the smallest increase.
  auto random_non_reducing = [&](const std::vector<Move>& moves) -> const Move* {
    int cls = d + 1;
    for (const auto& m : moves)
      if (2 * m.dim_class() >= d) cls = std::min(cls, m.dim_class());
    std::vector<const Move*> pool;
    for (const auto& m : moves)
      if (m.dim_class() == cls) pool.push_back(&m);
    if (pool.empty()) return nullptr;
    return pool[rng_.index(pool.size())];
  };

  auto moves = candidates();
  if (moves.empty()) {
    finished_ = true;
    return false;
  }
  int cls = d + 1;
  for (const auto& m : moves)
    if (2 * m.dim_class() < d) cls = std::min(cls, m.dim_class());
  if (cls <= d) {
    auto it = std::find_if(moves.begin(), moves.end(), [&](const Move& m) { return m.dim_class() == cls; });
    apply(*it);
  } else if (++stall_ >= opts_.heating) {
    stall_ = 0;
    for (int r = 0; r < opts_.relaxation; ++r) {
      if (r > 0) moves = candidates();
      const Move* m = random_non_reducing(moves);
      if (!m) break;
      apply(*m);
    }
  } else {
    apply(*random_non_reducing(moves));
  }

  if (reversed_f_less(t_.f(), best_f_)) {
    best_f_ = t_.f();
    best_ = current();
    best_len_ = log_.size();
    improved_ = true;
    stall_ = 0;
  }
  if (at_goal()) finished_ = true;
  return !finished_;
}

ReductionResult Reducer::result() const {
  ReductionResult out;
  out.complex = best_.with_name(name_);
  out.moves.assign(log_.begin(), log_.begin() + static_cast<std::ptrdiff_t>(best_len_));
  out.converged = converged_;
  out.rounds_used = rounds_;
  return out;
}

}  // namespace detail

ReductionResult reduce(const Complex& c, const ReductionOptions& opts) {
  detail::Reducer r(c, opts);
  while (r.step()) {
  }
  return r.result();
}

EquivalenceResult bistellarly_equivalent(const Complex& a, const Complex& b, const ReductionOptions& opts) {
  EquivalenceResult out;
  if (a.dim() != b.dim() || !a.is_pure() || !b.is_pure()) {
    out.reason = "dimension";
    return out;
  }
  if (homology(a) != homology(b)) {
    out.reason = "homology";
    return out;
  }
  if (is_isomorphic(a, b)) {
    out.established = true;
    return out;
  }
  ReductionOptions oa = opts, ob = opts;
  oa.target.reset();
  oa.target_f.reset();
  ob.target.reset();
  ob.target_f.reset();
  ob.seed = opts.seed + 1;

  struct Entry {
    std::vector<std::int64_t> f;
    Complex c;
  };
  struct Track {
    detail::Reducer r;
    std::vector<Entry> history;
  };
  Track ta{detail::Reducer(a, oa), {{f_vector(a), a}}};
  Track tb{detail::Reducer(b, ob), {{f_vector(b), b}}};

  auto meets = [](const Complex& c, const std::vector<std::int64_t>& f, const std::vector<Entry>& other) {
    for (const auto& e : other)
      if (e.f == f && is_isomorphic(c, e.c)) return true;
    return false;
  };
  auto has_f = [](const std::vector<std::int64_t>& f, const std::vector<Entry>& other) {
    return std::any_of(other.begin(), other.end(), [&](const Entry& e) { return e.f == f; });
  };
  auto advance = [&](Track& self, const Track& other) {
    if (self.r.finished()) return false;
    self.r.step();
    if (self.r.improved()) {
      self.history.push_back({self.r.best_f(), self.r.best()});
      return meets(self.r.best(), self.r.best_f(), other.history);
    }
    // Wandering on a plateau: compare only when some state of the other side has this f-vector.
    if (has_f(self.r.state().f(), other.history)) {
      return meets(self.r.current(), self.r.state().f(), other.history);
    }
    return false;
  };
  while (!ta.r.finished() || !tb.r.finished()) {
    if (advance(ta, tb) || advance(tb, ta)) {
      out.established = true;
      break;
    }
  }
  out.rounds_used = std::max(ta.r.rounds(), tb.r.rounds());
  if (!out.established) out.reason = "budget";
  return out;
}

const char* to_string(ManifoldStatus s) {
  switch (s) {
    case ManifoldStatus::manifold: return "manifold";
    case ManifoldStatus::not_manifold: return "not_manifold";
    case ManifoldStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

ManifoldStatus sphere_status(const Complex& s, const ReductionOptions& opts);

// A ball is a complex whose boundary is a sphere and whose boundary cone closes it to a sphere.
ManifoldStatus ball_status(const Complex& b, const ReductionOptions& opts) {
  auto bd = boundary(b);
  auto st = sphere_status(bd, opts);
  if (st != ManifoldStatus::manifold) return st;
  // Glue a cone over the boundary: apex n+1, boundary faces re-indexed into b.
  std::vector<std::vector<std::int64_t>> raw;
  for (const auto& f : b.facets()) raw.emplace_back(f.begin(), f.end());
  for (const auto& f : boundary_facets(b)) {
    std::vector<std::int64_t> g(f.begin(), f.end());
    g.push_back(b.vertex_count() + 1);
    raw.push_back(std::move(g));
  }
  return sphere_status(from_facets(raw), opts);
}

ManifoldStatus sphere_status(const Complex& s, const ReductionOptions& opts) {
  if (s.empty() || !s.is_pure()) return ManifoldStatus::not_manifold;
  const int k = s.dim();
  auto fl = structural_flags(s);
  if (!fl.is_pseudomanifold || fl.has_boundary) return ManifoldStatus::not_manifold;
  if (k == 0) return s.vertex_count() == 2 ? ManifoldStatus::manifold : ManifoldStatus::not_manifold;
  if (!fl.is_connected) return ManifoldStatus::not_manifold;
  if (k == 1) return ManifoldStatus::manifold;
  if (homology(s) != sphere_homology(k)) return ManifoldStatus::not_manifold;
  if (k == 2) {
    for (int v = 1; v <= s.vertex_count(); ++v)
      if (!structural_flags(link(s, {v})).is_connected) return ManifoldStatus::not_manifold;
    return ManifoldStatus::manifold;
  }
  ReductionOptions o = opts;
  o.target.reset();
  o.target_f.reset();
  return reduce(s, o).converged ? ManifoldStatus::manifold : ManifoldStatus::unknown;
}

}  // namespace

ManifoldStatus vertex_link_status(const Complex& c, Vertex v, const ReductionOptions& opts) {
  auto lk = link(c, {v});
  if (lk.empty()) return c.dim() == 0 ? ManifoldStatus::manifold : ManifoldStatus::not_manifold;
  if (!lk.is_pure()) return ManifoldStatus::not_manifold;
  if (structural_flags(lk).has_boundary) return ball_status(lk, opts);
  return sphere_status(lk, opts);
}

ManifoldStatus is_combinatorial_manifold(const Complex& c, const ReductionOptions& opts) {
  if (!c.is_pure()) throw PreconditionError("manifold check requires a pure complex");
  if (!structural_flags(c).is_pseudomanifold) return ManifoldStatus::not_manifold;
  ManifoldStatus out = ManifoldStatus::manifold;
  for (int v = 1; v <= c.vertex_count(); ++v) {
    auto s = vertex_link_status(c, v, opts);
    if (s == ManifoldStatus::not_manifold) return s;
    if (s == ManifoldStatus::unknown) out = s;
  }
  return out;
}

}  // namespace simplicia
