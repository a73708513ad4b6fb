#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricreal/cone.hpp"
#include "toricreal/polytope.hpp"
#include "toricreal/toric.hpp"

namespace toricreal {

enum class WallType { flip, divisorial_contraction, divisorial_extraction };

/// "flip", "divisorial_contraction", "divisorial_extraction".
std::string to_string(WallType w);
/// "a flip", "a divisorial contraction", "a divisorial extraction".
std::string describe(WallType w);

/// Pseudo-effective cone: positive hull of the ray classes in Cl(X) tensor Q.
Cone effective_cone(const ToricVariety& X);
/// Intersection over all rays rho of the positive hull of the other classes.
Cone movable_cone(const ToricVariety& X);

/// Some divisor whose class is `cls`.
Divisor divisor_with_class(const ToricVariety& X, const RatVector& cls);

struct Chamber {
  Cone cone;
  /// Divisor whose class is the sum of the chamber's rays.
  Divisor sample;
  bool movable = false;
};

struct ChamberDecomposition {
  std::size_t class_dim = 0;
  /// Class of each prime divisor D_i, in ray order.
  std::vector<IntVector> ray_classes;
  Cone effective;
  Cone movable;
  std::vector<Chamber> chambers;

  std::size_t movable_count() const;
  /// Chambers sharing a wall (intersection of codimension one).
  bool adjacent(std::size_t i, std::size_t j) const;
  /// Index of the chamber whose interior contains the class, if any.
  std::ptrdiff_t locate(const RatVector& cls) const;
};

/// Maximal Mori chambers of the effective cone. Cells of the arrangement of
/// hyperplanes spanned by ray classes are merged when their sample divisors
/// have the same normal fan.
/// Throws GeometryError(not_simplicial) or GeometryError(torsion_class_group).
ChamberDecomposition secondary_fan(const ToricVariety& X);

/// P_{A}+P_{B} has the normal fan of both P_A and P_B.
/// Throws GeometryError(not_big).
bool same_chamber(const ToricVariety& X, const Divisor& A, const Divisor& B);

/// Seeded perturbation of A inside its chamber. A candidate moves one
/// coefficient (index drawn as `engine() % k`, direction as `engine() % 2`)
/// by 2^-s for s = 0, 1, ..., 9; each candidate counts as one attempt.
/// The engine is std::mt19937_64 seeded with `seed`.
/// Throws GeometryError(exhausted_attempts).
Divisor modify(const ToricVariety& X, const Divisor& A, std::uint64_t seed, std::size_t max_attempts = 1000);

/// f_S = min(f_A, f_B) + 1 and |f_A - f_B| <= 1, where f are facet counts of
/// P_A, P_B and P_A+P_B: a divisorial step adds one facet and the sum keeps
/// the larger count, a flip keeps the count and the sum gains one facet.
/// Throws GeometryError(same_chamber).
bool is_wall_crossing(const Polytope& PA, const Polytope& PB);

/// By the sign of f_B - f_A: equal is a flip, more facets an extraction,
/// fewer a contraction. Throws GeometryError(same_chamber).
WallType classify_wall(const Polytope& PA, const Polytope& PB);

/// Ray classes, chamber generators and the adjacency graph with the wall
/// type observed when crossing from the lower to the higher index.
std::string chamber_report(const ToricVariety& X, const ChamberDecomposition& cd);

}  // namespace toricreal
