#pragma once

#include <string>
#include <vector>

#include "toricreal/exact.hpp"
#include "toricreal/fan.hpp"
#include "toricreal/polytope.hpp"

namespace toricreal {

/// Coefficients b_i of D = sum b_i D_i, one per ray in fan order.
using Divisor = RatVector;

/// Cl(X) = Z^k / im(P) where P is the k x n ray matrix.
struct ClassGroup {
  /// c x k matrix sending a divisor to its class in the free part Z^c,
  /// row-Hermite-reduced so the basis is canonical.
  IntegerMatrix free_part;
  /// Nontrivial torsion invariants d_i > 1, and the rows computing each
  /// torsion coordinate modulo d_i.
  std::vector<Integer> torsion;
  IntegerMatrix torsion_part;

  std::size_t rank() const { return free_part.rows(); }
  bool is_free() const { return torsion.empty(); }
};

class ToricVariety {
 public:
  ToricVariety() = default;
  explicit ToricVariety(Fan fan);

  const Fan& fan() const { return fan_; }
  std::size_t dim() const { return fan_.dim(); }
  std::size_t ray_count() const { return fan_.rays().size(); }
  const std::vector<IntVector>& rays() const { return fan_.rays(); }

  bool is_complete() const { return complete_; }
  /// Reported as "Q-factorial".
  bool is_simplicial() const { return simplicial_; }
  bool is_smooth() const { return smooth_; }

  const ClassGroup& class_group() const { return class_group_; }

 private:
  Fan fan_;
  bool complete_ = false;
  bool simplicial_ = false;
  bool smooth_ = false;
  ClassGroup class_group_;
};

ClassGroup compute_class_group(const std::vector<IntVector>& rays, std::size_t dim);

/// P_D = {m : <rho_i, m> + b_i >= 0 for all i}.
/// Throws GeometryError(empty) or GeometryError(unbounded).
Polytope moment_polytope(const ToricVariety& X, const Divisor& D);

/// Throws GeometryError(lower_dimensional).
ToricVariety from_normal_fan(const Polytope& P);

/// Image of D in the free part of Cl(X) tensor Q.
RatVector divisor_class(const ToricVariety& X, const Divisor& D);
/// Integral divisors must agree in Cl(X) including torsion; otherwise the
/// rational classes are compared.
bool linearly_equivalent(const ToricVariety& X, const Divisor& D, const Divisor& E);

bool is_cartier(const ToricVariety& X, const Divisor& D);
bool is_q_cartier(const ToricVariety& X, const Divisor& D);
/// Q-Cartier and the normal fan of P_D is the fan of X.
bool is_ample(const ToricVariety& X, const Divisor& D);
/// P_D is nonempty and full-dimensional.
bool is_big(const ToricVariety& X, const Divisor& D);

Divisor anticanonical(const ToricVariety& X);
bool is_fano(const ToricVariety& X);

/// Divisor with a single nonzero coefficient.
Divisor prime_divisor(const ToricVariety& X, std::size_t i, const Rational& coefficient = 1);

/// Rays of P(O(D_1) + ... + O(D_t)) over the fan with rays `rays`, where
/// `summands` holds the coefficient rows of D_1..D_t. Base rays come first,
/// lifted as (rho, D_2[rho]-D_1[rho], ..., D_t[rho]-D_1[rho]); then the fiber
/// rays -(e_1+...+e_{t-1}), e_1, ..., e_{t-1}.
std::vector<IntVector> proj_rays(const std::vector<IntVector>& rays, const std::vector<IntVector>& summands);

/// The projective bundle with rays sorted lexicographically.
ToricVariety projective_bundle(const ToricVariety& X, const std::vector<IntVector>& summands);

/// sum_i coefficients[i] v_i = 0, with `collection` the primitive collection
/// (the left-hand side of the relation as written).
struct PrimitiveRelation {
  IntVector coefficients;
  ConeIndices collection;
};

/// Parses "v2 + v3 + v4 = v1", "v4+v5+v6=2v1", "v1 + v7 = 0". Symbols are
/// 1-based; `ray_count` of 0 means "largest index seen".
PrimitiveRelation parse_primitive_relation(const std::string& text, std::size_t ray_count = 0);

/// Throws GeometryError(inconsistent_relations) or GeometryError(not_complete).
ToricVariety from_primitive_relations(const std::vector<PrimitiveRelation>& relations);

}  // namespace toricreal
