#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace simplicia {

/// Vertex indices are 1-based and contiguous (1..n) inside a Complex.
using Vertex = int;

/// A face is a strictly increasing list of vertices.
using Face = std::vector<Vertex>;

/// Display label of a vertex: either an integer or free text (e.g. "3-7" for
/// normal-surface vertices sitting on the ambient edge 3-7).
using Label = std::variant<std::int64_t, std::string>;

std::string to_string(const Label& label);
nlohmann::json label_to_json(const Label& label);
Label label_from_json(const nlohmann::json& j);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Enables recomputation checks in the property cache: with validation on,
/// every cached lookup recomputes the value and throws CacheMismatch if it
/// differs from the stored one. Off by default; tests turn it on.
void set_cache_validation(bool enabled);
bool cache_validation_enabled();

/// Write-once property map. Concurrent callers may compute the same entry;
/// the first publication wins and later ones must agree with it.
class PropertyCache {
 public:
  std::optional<nlohmann::json> get(std::string_view key) const;

  /// Stores `value` unless `key` is present. Returns the stored value.
  /// Throws CacheMismatch if a different value is already stored.
  nlohmann::json publish(const std::string& key, nlohmann::json value);

  std::map<std::string, nlohmann::json> snapshot() const;
  bool empty() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, nlohmann::json, std::less<>> values_;
};

namespace detail {
struct ComplexIndex;
}

/// A finite simplicial complex given by its facets.
///
/// Facets are sorted and inclusion-maximal; vertices are 1..n with
/// `labels()[i-1]` the display label of vertex i. Complexes are immutable;
/// the lazily built incidence index and the property cache are shared
/// between copies.
class Complex {
 public:
  /// The empty complex (no facets, no vertices, dimension -1).
  Complex();

  /// Trusted constructor: `facets` must already satisfy all invariants.
  /// Use from_facets() for untrusted input.
  Complex(std::vector<Face> facets, std::vector<Label> labels, std::string name = {});

  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  Complex with_name(std::string name) const;

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return facets_.empty(); }
  bool is_pure() const noexcept { return pure_; }

  /// Indices (into facets()) of the facets containing vertex v.
  const std::vector<int>& facets_of_vertex(Vertex v) const;

  /// Ridge (codimension-1 face) -> indices of incident facets. Pure complexes only.
  const std::vector<int>* facets_of_ridge(const Face& ridge) const;

  bool contains_face(const Face& f) const;

  /// Labels of the given vertices in order.
  std::vector<Label> labels_of(std::span<const Vertex> vertices) const;

  PropertyCache& cache() const { return *cache_; }

  /// Equality of facets and labels (names and caches are ignored).
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.facets_ == b.facets_ && a.labels_ == b.labels_;
  }

 private:
  const detail::ComplexIndex& index() const;

  std::vector<Face> facets_;
  std::vector<Label> labels_;
  std::string name_;
  int dim_ = -1;
  bool pure_ = true;
  std::shared_ptr<detail::ComplexIndex> index_;
  std::shared_ptr<PropertyCache> cache_;
};

/// Returns the cached value under `key`, computing and publishing it on a miss.
template <class Compute>
nlohmann::json cached(const Complex& c, const std::string& key, Compute&& compute) {
  if (!cache_validation_enabled()) {
    if (auto hit = c.cache().get(key)) return *hit;
  }
  return c.cache().publish(key, nlohmann::json(compute()));
}

struct StructuralFlags {
  bool is_pure = true;
  bool is_connected = true;
  bool is_strongly_connected = true;
  bool is_pseudomanifold = true;
  bool has_boundary = false;

  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

void to_json(nlohmann::json& j, const StructuralFlags& f);
void from_json(const nlohmann::json& j, StructuralFlags& f);

/// Builds a complex from raw facets: each facet is deduplicated and sorted,
/// non-maximal facets are dropped and the vertices are compacted to 1..n in
/// increasing order of their raw values. Without `labels` the raw values
/// become the labels; otherwise raw vertex v is labelled `labels[v-1]`.
Complex from_facets(std::span<const std::vector<std::int64_t>> raw_facets,
                    std::optional<std::vector<Label>> labels = std::nullopt);
Complex from_facets(std::initializer_list<std::vector<std::int64_t>> raw_facets);

/// Same as from_facets but for faces already expressed in 1-based vertex
/// indices of `ambient`; labels are taken from `ambient`. An empty facet
/// list gives the empty complex.
Complex subcomplex_from_faces(const Complex& ambient, std::vector<Face> faces,
                              std::string name = {});

/// All k-faces in lexicographic order; empty when k is out of range.
std::vector<Face> faces(const Complex& c, int k);

/// (f_0, ..., f_d).
std::vector<std::int64_t> f_vector(const Complex& c);

std::vector<Face> star_facets(const Complex& c, const Face& f);
std::vector<Face> link_facets(const Complex& c, const Face& f);

/// Facets containing f, as a complex (labels preserved).
Complex star(const Complex& c, const Face& f);

/// {g : g ∪ f is a face, g ∩ f = ∅}. The link of a facet is the empty complex.
Complex link(const Complex& c, const Face& f);

/// Ridges lying in exactly one facet, in ambient vertex indices.
std::vector<Face> boundary_facets(const Complex& c);
Complex boundary(const Complex& c);

/// Full subcomplex spanned by the given vertices, in ambient indices.
std::vector<Face> induced_facets(const Complex& c, std::span<const Vertex> vertices);

StructuralFlags structural_flags(const Complex& c);

/// Applies `perm` (perm[v-1] is the image of v) to the vertex indices;
/// labels travel with their vertices.
Complex relabel(const Complex& c, std::span<const Vertex> perm);

/// Sorted face from arbitrary vertex list.
Face make_face(std::vector<Vertex> vertices);

bool is_subface(const Face& small, const Face& big);

}  // namespace simplicia
