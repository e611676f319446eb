#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplicia/complex.hpp"
#include "simplicia/snf.hpp"

namespace simplicia {

/// Betti rank and torsion coefficients of one homology group.
struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  // each >= 2, each divides the next

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integral homology in degrees 0..d, reduced in degree 0.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  std::size_t size() const noexcept { return groups.size(); }
  const HomologyGroup& operator[](std::size_t k) const { return groups.at(k); }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// "[[0,[]],[0,[2]],[0,[]],[1,[]]]"
std::string format_homology(const HomologyProfile& h);

void to_json(nlohmann::json& j, const HomologyGroup& g);
void from_json(const nlohmann::json& j, HomologyGroup& g);
void to_json(nlohmann::json& j, const HomologyProfile& h);
void from_json(const nlohmann::json& j, HomologyProfile& h);

/// Simplicial boundary map C_k -> C_{k-1} over the lexicographically sorted
/// faces, with sign (-1)^t for dropping the t-th vertex. For k = 0 this is
/// the augmentation C_0 -> Z.
IntegerMatrix boundary_matrix(const Complex& c, int k);

/// Reduced integral homology from Smith normal forms of the boundary maps.
HomologyProfile homology(const Complex& c);

/// Ranks of reduced homology with Z/p coefficients, degrees 0..d.
std::vector<std::int64_t> homology_mod_p(const Complex& c, std::uint32_t p);

/// Homology of the standard d-sphere (reduced): zeros except Z in degree d.
HomologyProfile sphere_homology(int d);

}  // namespace simplicia
