#include "simplicia/homology.hpp"

#include <algorithm>
#include <sstream>

#include "simplicia/errors.hpp"

namespace simplicia {

std::string format_homology(const HomologyProfile& h) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    if (k) os << ',';
    os << '[' << h.groups[k].betti << ",[";
    for (std::size_t t = 0; t < h.groups[k].torsion.size(); ++t) {
      if (t) os << ',';
      os << h.groups[k].torsion[t];
    }
    os << "]]";
  }
  os << ']';
  return os.str();
}

void to_json(nlohmann::json& j, const HomologyGroup& g) { j = nlohmann::json::array({g.betti, g.torsion}); }

void from_json(const nlohmann::json& j, HomologyGroup& g) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("homology entry must be [betti, [torsion...]]");
  j[0].get_to(g.betti);
  j[1].get_to(g.torsion);
}

void to_json(nlohmann::json& j, const HomologyProfile& h) { j = h.groups; }
void from_json(const nlohmann::json& j, HomologyProfile& h) { j.get_to(h.groups); }

namespace {

std::int64_t face_index(const std::vector<Face>& sorted, const Face& f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  return it - sorted.begin();
}

IntegerMatrix boundary_from_faces(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  IntegerMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  Face sub;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Face& f = upper[j];
    for (std::size_t t = 0; t < f.size(); ++t) {
      sub.clear();
      for (std::size_t u = 0; u < f.size(); ++u)
        if (u != t) sub.push_back(f[u]);
      m.add(static_cast<int>(face_index(lower, sub)), static_cast<int>(j), (t % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

}  // namespace

IntegerMatrix boundary_matrix(const Complex& c, int k) {
  if (k < 0 || k > c.dim()) return IntegerMatrix(0, 0);
  auto upper = faces(c, k);
  if (k == 0) {
    IntegerMatrix m(1, static_cast<int>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) m.add(0, static_cast<int>(j), 1);
    return m;
  }
  return boundary_from_faces(faces(c, k - 1), upper);
}

HomologyProfile homology(const Complex& c) {
  auto j = cached(c, "homology", [&] {
    const int d = c.dim();
    HomologyProfile h;
    if (d < 0) return nlohmann::json(h);
    std::vector<std::vector<Face>> by_dim(d + 1);
    for (int k = 0; k <= d; ++k) by_dim[k] = faces(c, k);
    // snf[k] = SNF of the boundary map out of dimension k (k = 0 is augmentation).
    std::vector<SNFResult> snf(d + 2);
    for (int k = 0; k <= d; ++k) {
      if (k == 0) {
        snf[0].rank = by_dim[0].empty() ? 0 : 1;
        snf[0].invariant_factors.assign(snf[0].rank, 1);
      } else {
        snf[k] = smith_normal_form(boundary_from_faces(by_dim[k - 1], by_dim[k]));
      }
    }
    for (int k = 0; k <= d; ++k) {
      HomologyGroup g;
      g.betti = static_cast<std::int64_t>(by_dim[k].size()) - snf[k].rank - snf[k + 1].rank;
      for (const auto& factor : snf[k + 1].invariant_factors)
        if (factor > 1) g.torsion.push_back(static_cast<std::int64_t>(factor));
      h.groups.push_back(std::move(g));
    }
    return nlohmann::json(h);
  });
  return j.get<HomologyProfile>();
}

std::vector<std::int64_t> homology_mod_p(const Complex& c, std::uint32_t p) {
  auto j = cached(c, "homology_mod_" + std::to_string(p), [&] {
    const int d = c.dim();
    std::vector<std::int64_t> ranks;
    if (d < 0) return nlohmann::json(ranks);
    std::vector<std::vector<Face>> by_dim(d + 1);
    for (int k = 0; k <= d; ++k) by_dim[k] = faces(c, k);
    std::vector<std::int64_t> r(d + 2, 0);
    r[0] = by_dim[0].empty() ? 0 : 1;
    for (int k = 1; k <= d; ++k) r[k] = rank_mod_p(boundary_from_faces(by_dim[k - 1], by_dim[k]), p);
    for (int k = 0; k <= d; ++k) ranks.push_back(static_cast<std::int64_t>(by_dim[k].size()) - r[k] - r[k + 1]);
    return nlohmann::json(ranks);
  });
  return j.get<std::vector<std::int64_t>>();
}

HomologyProfile sphere_homology(int d) {
  HomologyProfile h;
  h.groups.resize(std::max(d + 1, 0));
  if (d >= 0) h.groups[d].betti = 1;
  return h;
}

}  // namespace simplicia
