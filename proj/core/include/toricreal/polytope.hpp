#pragma once

// Exact rational convex polytopes with both descriptions.
//
// Canonical form: vertices sorted lexicographically; facet halfspaces
// <normal, m> + offset >= 0 with primitive integer normals, irredundant and
// sorted. Lower-dimensional polytopes additionally carry the equations of
// their affine hull. Two polytopes are equal iff their vertex lists are.

#include <utility>
#include <vector>

#include "toricreal/exact.hpp"
#include "toricreal/fan.hpp"

namespace toricreal {

/// <normal, m> + offset >= 0 (or == 0 when used as an equation).
struct Halfspace {
  IntVector normal;
  Rational offset;

  Rational evaluate(const RatVector& m) const { return dot(normal, m) + offset; }
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.offset != b.offset) return a.offset < b.offset ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

class Polytope {
 public:
  /// Throws GeometryError(empty) or GeometryError(unbounded).
  static Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t ambient_dim);
  /// Convex hull; `points` must be nonempty.
  static Polytope from_vertices(const std::vector<RatVector>& points, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  const std::vector<RatVector>& vertices() const { return vertices_; }
  /// Facets.
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  /// Affine hull, as <normal, m> + offset == 0.
  const std::vector<Halfspace>& equations() const { return equations_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t facet_count() const { return halfspaces_.size(); }

  bool incident(std::size_t facet, std::size_t vertex) const { return incidence_[facet][vertex]; }
  std::vector<std::size_t> facets_through(std::size_t vertex) const;
  std::vector<std::size_t> vertices_on(std::size_t facet) const;
  /// Pairs of vertex indices spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool contains(const RatVector& m) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> halfspaces_;
  std::vector<Halfspace> equations_;
  std::vector<std::vector<bool>> incidence_;
};

/// Hull of pairwise vertex sums.
Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

/// P intersected with {a <= <u, m> <= b}. Throws GeometryError(empty).
Polytope slab(const Polytope& P, const IntVector& u, const Rational& a, const Rational& b);

/// Drops coordinate `coordinate` (vertex projection followed by a hull).
Polytope project_out(const Polytope& P, std::size_t coordinate);
/// Applies a unimodular change of coordinates whose last row is u and drops
/// the last coordinate. On a slice {<u, m> = a} this identifies the slice's
/// lattice with Z^(d-1); for u = +-e_j it is exactly dropping coordinate j.
Polytope project_out(const Polytope& P, const IntVector& u);

Polytope scale(const Polytope& P, const Rational& factor);
/// lcm of the denominators of all vertex coordinates.
Integer lattice_scale_factor(const Polytope& P);
bool is_lattice_polytope(const Polytope& P);

/// Inner facet normals as rays; one maximal cone per vertex.
/// Throws GeometryError(lower_dimensional).
Fan normal_fan(const Polytope& P);

/// Normal-fan equality. This is stricter than face-lattice isomorphism:
/// it distinguishes polytopes with isomorphic lattices but different normal fans.
bool combinatorially_equivalent(const Polytope& P, const Polytope& Q);

}  // namespace toricreal
