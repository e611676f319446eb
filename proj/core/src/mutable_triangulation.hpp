#pragma once

// Mutable working copy of a pure complex used by the move kernels. Vertices
// carry stable ids that survive moves; Complex indices are recovered by rank.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "simplicia/bistellar.hpp"
#include "simplicia/complex.hpp"

namespace simplicia::detail {

class MutableTriangulation {
 public:
  MutableTriangulation() = default;
  explicit MutableTriangulation(const Complex& c);

  int dim() const noexcept { return d_; }
  std::size_t facet_count() const noexcept { return by_face_.size(); }
  std::size_t vertex_count() const noexcept { return live_.size(); }
  const std::vector<std::int64_t>& f() const noexcept { return f_; }

  /// Sorted live vertex ids.
  const std::vector<Vertex>& vertices() const noexcept { return live_; }

  std::vector<Face> facets() const;
  bool has_facet(const Face& f) const { return by_face_.count(f) != 0; }
  bool contains_face(const Face& f) const;

  /// Candidate moves in id space. Facet moves get b = {fresh id}.
  std::vector<Move> valid_moves(bool include_facet_moves, Vertex fresh_id) const;

  /// Applies a move given in id space (assumed valid). For facet moves b[0]
  /// is the new id and `label` its label.
  void apply(const Move& m, const Label& label);

  /// Id-space move -> Complex-index move on the current state.
  Move to_indices(const Move& m) const;
  Vertex index_of(Vertex id) const;
  Vertex id_of(Vertex index) const { return live_.at(index - 1); }

  const Label& label(Vertex id) const { return labels_.at(id); }
  std::vector<Label> current_labels() const;
  Vertex max_id() const noexcept { return live_.empty() ? 0 : live_.back(); }

  Complex to_complex() const;

 private:
  int d_ = -1;
  std::vector<Face> slots_;
  std::vector<char> alive_;
  std::vector<int> free_slots_;
  std::unordered_map<Face, int, FaceHash> by_face_;
  std::unordered_map<Vertex, std::vector<int>> vertex_slots_;
  std::unordered_map<Vertex, Label> labels_;
  std::vector<Vertex> live_;
  std::vector<std::int64_t> f_;

  void add_facet(Face f);
  void remove_facet(const Face& f);
};

}  // namespace simplicia::detail
