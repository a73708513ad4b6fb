#pragma once

// Polyhedral cones with both descriptions, built on an exact double
// description (DD) engine. The polytope module homogenizes into this.

#include <vector>

#include "toricreal/exact.hpp"

namespace toricreal {

namespace dd {

struct RaySet {
  std::vector<IntVector> rays;       ///< extreme rays of the pointed part (primitive)
  std::vector<IntVector> lineality;  ///< basis of the lineality space (primitive)
};

/// Generators of {x in R^dim : a . x >= 0 for every row a}.
///
/// Incremental double description: start from a simplicial cone cut out by
/// `dim` independent rows and insert the remaining rows one at a time, keeping
/// only pairs of rays that pass the combinatorial adjacency test.
RaySet extreme_rays(const std::vector<IntVector>& inequalities, std::size_t dim);

}  // namespace dd

/// A pointed polyhedral cone stored canonically: primitive extreme rays,
/// primitive facet inequalities (a . x >= 0), and equations of its linear
/// span (a . x == 0), each list sorted lexicographically.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(const std::vector<IntVector>& generators, std::size_t ambient_dim);
  static Cone from_generators(const std::vector<RatVector>& generators, std::size_t ambient_dim);
  /// Throws GeometryError(invalid_argument) if the cone has a lineality space.
  static Cone from_inequalities(const std::vector<IntVector>& inequalities, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_zero() const { return rays_.empty(); }

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  bool contains(const RatVector& x) const;
  /// Strict interior with respect to the linear span.
  bool contains_in_relative_interior(const RatVector& x) const;
  /// Sum of the extreme rays; lies in the relative interior.
  IntVector interior_point() const;

  Cone intersect(const Cone& other) const;

  /// Facet/ray incidence: rays lying on facet f.
  std::vector<std::size_t> rays_on_facet(std::size_t f) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

}  // namespace toricreal
