#include "toricreal/fan.hpp"

#include <algorithm>
#include <map>

#include "toricreal/cone.hpp"
#include "toricreal/errors.hpp"
#include "toricreal/linalg.hpp"

namespace toricreal {

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<ConeIndices> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
  for (const auto& r : rays_) {
    if (r.size() != dim_) throw GeometryError(Errc::invalid_fan, "ray dimension mismatch");
    if (!is_primitive(r)) throw GeometryError(Errc::invalid_fan, "ray (" + join(r) + ") is not primitive");
  }
  {
    auto sorted = rays_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GeometryError(Errc::invalid_fan, "duplicate rays");
  }
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (auto i : c)
      if (i >= rays_.size()) throw GeometryError(Errc::invalid_fan, "cone index out of range");
  }
}

std::vector<IntVector> Fan::cone_rays(std::size_t c) const {
  std::vector<IntVector> out;
  for (auto i : cones_[c]) out.push_back(rays_[i]);
  return out;
}

Fan Fan::validated(std::size_t dim, std::vector<IntVector> rays, std::vector<ConeIndices> cones) {
  Fan fan(dim, std::move(rays), std::move(cones));
  std::vector<Cone> cs;
  for (std::size_t c = 0; c < fan.cones_.size(); ++c) {
    Cone cone;
    try {
      cone = Cone::from_generators(fan.cone_rays(c), dim);
    } catch (const GeometryError&) {
      throw GeometryError(Errc::invalid_fan, "cone " + std::to_string(c) + " is not strongly convex");
    }
    if (cone.rays().size() != fan.cones_[c].size())
      throw GeometryError(Errc::invalid_fan, "cone " + std::to_string(c) + " lists a non-extreme ray");
    cs.push_back(std::move(cone));
  }
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      ConeIndices common;
      std::set_intersection(fan.cones_[a].begin(), fan.cones_[a].end(), fan.cones_[b].begin(),
                            fan.cones_[b].end(), std::back_inserter(common));
      std::vector<IntVector> common_rays;
      for (auto i : common) common_rays.push_back(fan.rays_[i]);
      Cone expected = Cone::from_generators(common_rays, dim);
      Cone actual = cs[a].intersect(cs[b]);
      if (!(expected == actual))
        throw GeometryError(Errc::invalid_fan, "cones " + std::to_string(a) + " and " + std::to_string(b) +
                                                   " do not meet in a common face");
    }
  return fan;
}

bool Fan::is_simplicial() const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto rs = cone_rays(c);
    if (rank(rs, dim_) != rs.size()) return false;
  }
  return true;
}

bool Fan::is_smooth() const {
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto rs = cone_rays(c);
    if (rank(rs, dim_) != rs.size()) return false;
    // A simplicial cone is unimodular iff its rays extend to a lattice basis,
    // i.e. the Smith invariants of the ray matrix are all 1.
    IntegerMatrix M = IntegerMatrix::from_rows(rs, dim_);
    SmithForm snf = smith_normal_form(M);
    for (std::size_t i = 0; i < snf.rank; ++i)
      if (snf.D(i, i) != 1) return false;
  }
  return true;
}

bool Fan::is_complete() const {
  if (cones_.empty()) return false;
  if (dim_ == 0) return true;
  std::map<ConeIndices, int> ridge_count;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto rs = cone_rays(c);
    if (rank(rs, dim_) != dim_) return false;
    Cone cone = Cone::from_generators(rs, dim_);
    for (std::size_t f = 0; f < cone.facets().size(); ++f) {
      ConeIndices ridge;
      for (auto i : cones_[c])
        if (dot(cone.facets()[f], rays_[i]) == 0) ridge.push_back(i);
      ++ridge_count[ridge];
    }
  }
  return std::all_of(ridge_count.begin(), ridge_count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::vector<std::vector<IntVector>> Fan::cone_key() const {
  std::vector<std::vector<IntVector>> key;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto rs = cone_rays(c);
    std::sort(rs.begin(), rs.end());
    key.push_back(std::move(rs));
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace toricreal
