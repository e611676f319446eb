#pragma once

#include <vector>

#include "simplicia/complex.hpp"

namespace simplicia {

/// A bijection on 1..n; image()[v-1] is the image of v.
class Permutation {
 public:
  /// Throws InvalidArgument unless `image` is a bijection on 1..image.size().
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(int n);
  /// Product of disjoint cycles on 1..n, e.g. from_cycles(7, {{1,2,3,4,5,6,7}}).
  static Permutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_.at(v - 1); }
  const std::vector<Vertex>& image() const noexcept { return image_; }

 private:
  std::vector<Vertex> image_;
};

/// Closure of `generator_facets` under the group generated by `group_gens`.
Complex from_generators(const std::vector<Face>& generator_facets,
                        const std::vector<Permutation>& group_gens);

/// Join on disjoint vertex sets; the second factor's vertices follow the first's.
/// The empty complex is the identity.
Complex join(const Complex& a, const Complex& b);
Complex cone(const Complex& c);
Complex suspension(const Complex& c);

/// Staircase triangulation of the product of two pure complexes. Vertex
/// (u, w) gets index (u-1)*n_b + w and the label "(label_u,label_w)".
Complex cartesian_product(const Complex& a, const Complex& b);

/// Removes the lexicographically first facet of each summand and identifies
/// their boundaries vertex-by-vertex in ascending order.
Complex connected_sum(const Complex& a, const Complex& b);

/// Removes two facets with disjoint closed vertex stars and identifies them in
/// ascending vertex order. For orientable input the result may be the
/// non-orientable handle, depending on the identification.
Complex handle_addition(const Complex& c, const Face& facet1, const Face& facet2);

/// Stellar subdivision of `face`: every facet F containing it is replaced by
/// the facets (F minus x) + w for x in `face`, where w = n+1 is a new vertex.
Complex stellar_subdivision(const Complex& c, const Face& face);

}  // namespace simplicia
