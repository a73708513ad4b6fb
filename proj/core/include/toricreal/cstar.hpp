#pragma once

// C*-actions on a polarized toric variety, read off its moment polytope P
// through a primitive functional u (u = e_j is the j-th coordinate action).

#include <optional>
#include <string>
#include <vector>

#include "toricreal/chambers.hpp"
#include "toricreal/polytope.hpp"

namespace toricreal {

/// u = e_j.
IntVector coordinate_functional(std::size_t dim, std::size_t j);
IntVector last_coordinate(std::size_t dim);

/// Sorted distinct values of <v, u> over the vertices.
std::vector<Rational> weights(const Polytope& P, const IntVector& u);

/// A connected component of the fixed locus: a union of faces on which u is
/// constant, given by its vertex indices.
struct FixedComponent {
  Rational weight;
  std::vector<std::size_t> vertices;
};

/// Sorted by weight, then by smallest vertex index.
std::vector<FixedComponent> fixed_components(const Polytope& P, const IntVector& u);
/// Vertices per weight, one entry per weight.
std::vector<std::size_t> fixed_vertex_counts(const Polytope& P, const IntVector& u);
std::size_t criticality(const Polytope& P, const IntVector& u);

/// slab(P, u, a, b). Throws GeometryError(empty).
Polytope pruning(const Polytope& P, const IntVector& u, const Rational& a, const Rational& b);
/// The slice at level a in one dimension less. Throws GeometryError(out_of_range).
Polytope quotient(const Polytope& P, const IntVector& u, const Rational& a);
/// One quotient per open interval between consecutive weights, at its midpoint.
std::vector<Polytope> geometric_quotients(const Polytope& P, const IntVector& u);

struct VarietyFlags {
  bool complete = false;
  bool q_factorial = false;
  bool smooth = false;
  bool fano = false;
};
VarietyFlags variety_flags(const Polytope& P);

/// Relation between consecutive geometric quotients. Unless the two are
/// combinatorially equivalent, `wall` is classify_wall and `elementary` is
/// is_wall_crossing.
struct QuotientStep {
  bool isomorphic = false;
  WallType wall = WallType::flip;
  bool elementary = false;
  std::size_t facets_before = 0;
  std::size_t facets_after = 0;
};

struct ActionReport {
  std::size_t criticality = 0;
  std::vector<Rational> weights;
  std::vector<std::size_t> fixed_vertex_counts;
  std::vector<FixedComponent> components;
  std::vector<std::size_t> quotient_vertex_counts;
  std::vector<QuotientStep> steps;
  VarietyFlags flags;
  std::size_t vertex_count = 0;
  std::size_t dimension = 0;
};

QuotientStep compare_quotients(const Polytope& before, const Polytope& after);
ActionReport action_info(const Polytope& P, const IntVector& u);

/// The five-part text block, one statement per line.
std::string render_text(const ActionReport& report);
/// JSON with a "schema" key.
std::string render_structured(const ActionReport& report);

}  // namespace toricreal
