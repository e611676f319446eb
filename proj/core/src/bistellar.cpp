#include "simplicia/bistellar.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mutable_triangulation.hpp"
#include "simplicia/errors.hpp"
#include "simplicia/rng.hpp"

namespace simplicia {

void to_json(nlohmann::json& j, const Move& m) {
  j = nlohmann::json{{"a", m.a}, {"b", m.b}};
  if (m.fresh_label) j["label"] = label_to_json(*m.fresh_label);
}

void from_json(const nlohmann::json& j, Move& m) {
  j.at("a").get_to(m.a);
  j.at("b").get_to(m.b);
  if (j.contains("label")) m.fresh_label = label_from_json(j.at("label"));
  else m.fresh_label.reset();
}

Label next_free_label(const std::vector<Label>& labels) {
  std::int64_t m = 0;
  for (const auto& l : labels) {
    if (const auto* i = std::get_if<std::int64_t>(&l)) m = std::max(m, *i);
    else return Label{std::string("v") + std::to_string(labels.size() + 1)};
  }
  return Label{m + 1};
}

std::vector<std::int64_t> move_f_delta(int d, std::size_t a_size, std::size_t b_size) {
  auto binom = [](std::int64_t n, std::int64_t k) -> std::int64_t {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  const auto a = static_cast<std::int64_t>(a_size);
  const auto b = static_cast<std::int64_t>(b_size);
  std::vector<std::int64_t> delta(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    // Added faces: b ∪ T with T a proper subset of a. Removed: a ∪ S with S proper in b.
    const std::int64_t t = k + 1 - b;
    const std::int64_t s = k + 1 - a;
    if (t >= 0 && t < a) delta[k] += binom(a, t);
    if (s >= 0 && s < b) delta[k] -= binom(b, s);
  }
  return delta;
}

namespace detail {

MutableTriangulation::MutableTriangulation(const Complex& c) : d_(c.dim()) {
  for (int v = 1; v <= c.vertex_count(); ++v) {
    live_.push_back(v);
    labels_.emplace(v, c.labels()[v - 1]);
  }
  for (const auto& f : c.facets()) add_facet(f);
  f_ = f_vector(c);
}

void MutableTriangulation::add_facet(Face f) {
  int slot;
  if (!free_slots_.empty()) {
    slot = free_slots_.back();
    free_slots_.pop_back();
    slots_[slot] = f;
    alive_[slot] = 1;
  } else {
    slot = static_cast<int>(slots_.size());
    slots_.push_back(f);
    alive_.push_back(1);
  }
  for (Vertex v : f) vertex_slots_[v].push_back(slot);
  by_face_.emplace(std::move(f), slot);
}

void MutableTriangulation::remove_facet(const Face& f) {
  auto it = by_face_.find(f);
  const int slot = it->second;
  by_face_.erase(it);
  alive_[slot] = 0;
  for (Vertex v : slots_[slot]) {
    auto& list = vertex_slots_[v];
    list.erase(std::find(list.begin(), list.end(), slot));
  }
  free_slots_.push_back(slot);
}

std::vector<Face> MutableTriangulation::facets() const {
  std::vector<Face> out;
  out.reserve(by_face_.size());
  for (const auto& [f, slot] : by_face_) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

bool MutableTriangulation::contains_face(const Face& f) const {
  if (f.empty()) return !by_face_.empty();
  auto it = vertex_slots_.find(f.front());
  if (it == vertex_slots_.end()) return false;
  for (int slot : it->second)
    if (is_subface(f, slots_[slot])) return true;
  return false;
}

std::vector<Move> MutableTriangulation::valid_moves(bool include_facet_moves, Vertex fresh_id) const {
  struct Acc {
    int count = 0;
    Face others;
  };
  std::vector<Move> out;
  const int size = d_ + 1;
  if (d_ < 1) return out;
  std::unordered_map<Face, Acc, FaceHash> acc;
  acc.reserve(by_face_.size() * ((1u << size) - 2));
  Face a, rest, merged;
  for (const auto& [f, slot] : by_face_) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << size); ++mask) {
      a.clear();
      rest.clear();
      for (int t = 0; t < size; ++t) ((mask >> t) & 1u ? a : rest).push_back(f[t]);
      // Link of a must be ∂b with |b| = d + 2 - |a| = |rest| + 1; a star with
      // more facets than that can never qualify.
      auto& e = acc[a];
      if (e.count < 0) continue;
      if (++e.count > static_cast<int>(rest.size()) + 1) {
        e.count = -1;
        continue;
      }
      merged.clear();
      std::set_union(e.others.begin(), e.others.end(), rest.begin(), rest.end(), std::back_inserter(merged));
      if (merged.size() > rest.size() + 1) {
        e.count = -1;
        continue;
      }
      e.others.swap(merged);
    }
    if (include_facet_moves) out.push_back(Move{f, {fresh_id}, std::nullopt});
  }
  for (auto& [face, e] : acc) {
    const int b_size = size + 1 - static_cast<int>(face.size());
    if (e.count != b_size || static_cast<int>(e.others.size()) != b_size) continue;
    if (contains_face(e.others)) continue;
    out.push_back(Move{face, e.others, std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MutableTriangulation::apply(const Move& m, const Label& label) {
  const bool facet_move = static_cast<int>(m.a.size()) == d_ + 1;
  if (facet_move) {
    const Vertex w = m.b.front();
    remove_facet(m.a);
    for (std::size_t skip = 0; skip < m.a.size(); ++skip) {
      Face g;
      for (std::size_t t = 0; t < m.a.size(); ++t)
        if (t != skip) g.push_back(m.a[t]);
      g.push_back(w);
      add_facet(make_face(std::move(g)));
    }
    live_.insert(std::upper_bound(live_.begin(), live_.end(), w), w);
    labels_[w] = label;
  } else {
    for (std::size_t skip = 0; skip < m.b.size(); ++skip) {
      Face g = m.a;
      for (std::size_t t = 0; t < m.b.size(); ++t)
        if (t != skip) g.push_back(m.b[t]);
      remove_facet(make_face(std::move(g)));
    }
    if (m.a.size() == 1) {
      add_facet(m.b);
      const Vertex gone = m.a.front();
      live_.erase(std::lower_bound(live_.begin(), live_.end(), gone));
      labels_.erase(gone);
      vertex_slots_.erase(gone);
    } else {
      for (std::size_t skip = 0; skip < m.a.size(); ++skip) {
        Face g = m.b;
        for (std::size_t t = 0; t < m.a.size(); ++t)
          if (t != skip) g.push_back(m.a[t]);
        add_facet(make_face(std::move(g)));
      }
    }
  }
  auto delta = move_f_delta(d_, m.a.size(), m.b.size());
  for (int k = 0; k <= d_; ++k) f_[k] += delta[k];
}

Vertex MutableTriangulation::index_of(Vertex id) const {
  return static_cast<Vertex>(std::lower_bound(live_.begin(), live_.end(), id) - live_.begin()) + 1;
}

Move MutableTriangulation::to_indices(const Move& m) const {
  Move out;
  for (Vertex v : m.a) out.a.push_back(index_of(v));
  for (Vertex v : m.b) out.b.push_back(index_of(v));
  out.fresh_label = m.fresh_label;
  return out;
}

std::vector<Label> MutableTriangulation::current_labels() const {
  std::vector<Label> out;
  out.reserve(live_.size());
  for (Vertex v : live_) out.push_back(labels_.at(v));
  return out;
}

Complex MutableTriangulation::to_complex() const {
  std::vector<Face> out;
  out.reserve(by_face_.size());
  for (const auto& [f, slot] : by_face_) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back(index_of(v));
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return Complex(std::move(out), current_labels());
}

}  // namespace detail

namespace {

bool is_facet_move(const Complex& c, const Move& m) {
  return static_cast<int>(m.a.size()) == c.dim() + 1 && m.b.size() == 1;
}

bool well_formed(const Face& f, int n) {
  if (f.empty() || !std::is_sorted(f.begin(), f.end())) return false;
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;
  return f.front() >= 1 && f.back() <= n;
}

}  // namespace

bool is_valid_move(const Complex& c, const Move& m) {
  if (!c.is_pure() || c.dim() < 1) return false;
  const int n = c.vertex_count();
  const int d = c.dim();
  if (!well_formed(m.a, n)) return false;
  if (is_facet_move(c, m)) {
    return std::binary_search(c.facets().begin(), c.facets().end(), m.a) && m.b[0] >= 1 && m.b[0] <= n + 1;
  }
  if (!well_formed(m.b, n)) return false;
  if (static_cast<int>(m.a.size() + m.b.size()) != d + 2) return false;
  Face common;
  std::set_intersection(m.a.begin(), m.a.end(), m.b.begin(), m.b.end(), std::back_inserter(common));
  if (!common.empty()) return false;
  if (!c.contains_face(m.a)) return false;
  // star(a) must be exactly a * ∂b.
  std::size_t star_size = 0;
  for (int i : c.facets_of_vertex(m.a.front())) {
    const Face& f = c.facets()[i];
    if (!is_subface(m.a, f)) continue;
    ++star_size;
    Face rest;
    std::set_difference(f.begin(), f.end(), m.a.begin(), m.a.end(), std::back_inserter(rest));
    if (!std::includes(m.b.begin(), m.b.end(), rest.begin(), rest.end())) return false;
  }
  if (star_size != m.b.size()) return false;
  return !c.contains_face(m.b);
}

Complex apply_move(const Complex& c, const Move& m) {
  if (!is_valid_move(c, m)) throw MoveNotApplicable();
  std::set<Face> facets(c.facets().begin(), c.facets().end());
  std::vector<Label> labels = c.labels();
  if (is_facet_move(c, m)) {
    const Vertex w = m.b[0];
    auto shift = [w](Vertex v) { return v >= w ? v + 1 : v; };
    std::set<Face> shifted;
    for (const auto& f : facets) {
      Face g;
      for (Vertex v : f) g.push_back(shift(v));
      shifted.insert(std::move(g));
    }
    Face a;
    for (Vertex v : m.a) a.push_back(shift(v));
    shifted.erase(a);
    for (std::size_t skip = 0; skip < a.size(); ++skip) {
      Face g;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (t != skip) g.push_back(a[t]);
      g.push_back(w);
      shifted.insert(make_face(std::move(g)));
    }
    facets = std::move(shifted);
    labels.insert(labels.begin() + (w - 1), m.fresh_label ? *m.fresh_label : next_free_label(c.labels()));
  } else {
    for (std::size_t skip = 0; skip < m.b.size(); ++skip) {
      Face g = m.a;
      for (std::size_t t = 0; t < m.b.size(); ++t)
        if (t != skip) g.push_back(m.b[t]);
      facets.erase(make_face(std::move(g)));
    }
    if (m.a.size() == 1) {
      const Vertex gone = m.a[0];
      facets.insert(m.b);
      std::set<Face> shifted;
      for (const auto& f : facets) {
        Face g;
        for (Vertex v : f) g.push_back(v > gone ? v - 1 : v);
        shifted.insert(std::move(g));
      }
      facets = std::move(shifted);
      labels.erase(labels.begin() + (gone - 1));
    } else {
      for (std::size_t skip = 0; skip < m.a.size(); ++skip) {
        Face g = m.b;
        for (std::size_t t = 0; t < m.a.size(); ++t)
          if (t != skip) g.push_back(m.a[t]);
        facets.insert(make_face(std::move(g)));
      }
    }
  }
  return Complex(std::vector<Face>(facets.begin(), facets.end()), std::move(labels), c.name());
}

Move reverse_move(const Complex& before, const Move& m) {
  if (is_facet_move(before, m)) {
    const Vertex w = m.b[0];
    Move r;
    r.a = {w};
    for (Vertex v : m.a) r.b.push_back(v >= w ? v + 1 : v);
    return r;
  }
  if (m.a.size() == 1) {
    const Vertex gone = m.a[0];
    Move r;
    for (Vertex v : m.b) r.a.push_back(v > gone ? v - 1 : v);
    r.b = {gone};
    r.fresh_label = before.labels().at(gone - 1);
    return r;
  }
  return Move{m.b, m.a, std::nullopt};
}

std::vector<Move> valid_moves(const Complex& c, std::optional<int> dim_class) {
  if (!c.is_pure()) throw PreconditionError("bistellar moves require a pure complex");
  detail::MutableTriangulation t(c);
  auto moves = t.valid_moves(true, c.vertex_count() + 1);
  if (dim_class) {
    std::erase_if(moves, [&](const Move& m) { return m.dim_class() != *dim_class; });
  }
  return moves;
}

RandomizeResult randomize(const Complex& c, int n_moves, std::uint64_t seed) {
  if (!c.is_pure()) throw PreconditionError("randomize requires a pure complex");
  detail::MutableTriangulation t(c);
  Rng rng(seed);
  RandomizeResult out;
  for (int step = 0; step < n_moves; ++step) {
    const Vertex fresh = t.max_id() + 1;
    auto moves = t.valid_moves(true, fresh);
    if (moves.empty()) break;
    const Move& m = moves[rng.index(moves.size())];
    out.moves.push_back(t.to_indices(m));
    t.apply(m, next_free_label(t.current_labels()));
    ++out.applied;
  }
  out.complex = t.to_complex().with_name(c.name());
  return out;
}

Complex replay(const Complex& c, const std::vector<Move>& moves) {
  Complex cur = c;
  for (const auto& m : moves) cur = apply_move(cur, m);
  return cur;
}

}  // namespace simplicia
