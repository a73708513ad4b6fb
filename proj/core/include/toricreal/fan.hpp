#pragma once

#include <cstddef>
#include <vector>

#include "toricreal/exact.hpp"

namespace toricreal {

using ConeIndices = std::vector<std::size_t>;

/// Rays plus maximal cones (as sorted ray-index sets) in a lattice N = Z^dim.
class Fan {
 public:
  Fan() = default;
  /// Checks that rays are primitive, nonzero and pairwise distinct and that
  /// cone indices are in range. Cones are stored sorted.
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<ConeIndices> cones);

  /// Additionally checks strong convexity of every cone and that any two
  /// cones meet in a common face. Throws GeometryError(invalid_fan).
  static Fan validated(std::size_t dim, std::vector<IntVector> rays, std::vector<ConeIndices> cones);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<ConeIndices>& cones() const { return cones_; }

  /// Every maximal cone is full-dimensional and every facet of a maximal cone
  /// is shared by exactly two maximal cones.
  bool is_complete() const;
  bool is_simplicial() const;
  /// Simplicial with every maximal cone unimodular.
  bool is_smooth() const;

  /// Maximal cones as sorted lists of ray vectors, sorted. Two fans are
  /// equal as sets of cones iff their keys match.
  std::vector<std::vector<IntVector>> cone_key() const;
  bool same_cones(const Fan& other) const { return cone_key() == other.cone_key(); }

  std::vector<IntVector> cone_rays(std::size_t c) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<ConeIndices> cones_;
};

}  // namespace toricreal
