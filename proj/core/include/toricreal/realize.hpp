#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricreal/cstar.hpp"
#include "toricreal/polytope.hpp"
#include "toricreal/toric.hpp"

namespace toricreal {

struct Provenance {
  Divisor A;
  Divisor B;
  Integer ell = 1;
  /// Rays of the projective bundle W and the divisor D on W before scaling.
  std::vector<IntVector> bundle_rays;
  Divisor bundle_divisor;
  std::optional<std::uint64_t> seed;
  std::size_t modifications = 0;
  /// Set by fano_realization.
  std::optional<Integer> m;
};

struct Realization {
  /// Polytope of (X, m D) with m the lcm of the weight denominators, so the
  /// weights are integers. The action is the last coordinate.
  Polytope polytope;
  IntVector u;
  Integer scale = 1;
  Provenance provenance;
};

/// H = (B - A) / ell must be integral and Cartier, A big and P_B nonempty.
/// P_D for D = ell * L + pullback(A) on W = P(O + O(H)), scaled so that its
/// weights are integral.
Realization geometric_realization(const ToricVariety& Y, const Divisor& A, const Divisor& B, const Integer& ell = 1);

/// Criticality at most 1, or every consecutive pair of geometric quotients
/// passes is_wall_crossing.
bool is_sharp(const Polytope& P, const IntVector& u);
bool is_sharp(const Realization& G);

/// Repeatedly replaces A by modify(Y, A, seed + n) until the realization
/// (with ell = 1, after clearing denominators of A and B jointly) is sharp.
/// Throws GeometryError(exhausted_attempts).
Realization sharp_realization(const ToricVariety& Y, const Divisor& A, const Divisor& B, std::uint64_t seed,
                              std::size_t max_modifications = 100);

/// P_{L + a D_1 + b D_2} on W = P(O(E) + O(F)), where D_1, D_2 are the
/// sections of the two fiber rays and L = pullback(E) + D_1. Scaled so that
/// its weights are integral.
Realization unpruning(const ToricVariety& Y, const Divisor& E, const Divisor& F, const Integer& a, const Integer& b);

/// Which divisor compute_m tests for ampleness:
/// `code` is m(1,...,1) + H, `prose` is m(1,...,1) - H.
enum class AmpleConvention { code, prose };

/// Least m >= 1 (up to `cap`) with the chosen divisor ample.
/// Throws GeometryError(not_fano) or GeometryError(no_such_m).
Integer compute_m(const ToricVariety& Y, const Divisor& H, AmpleConvention convention = AmpleConvention::code,
                  const Integer& cap = 1000);

/// unpruning(Y, mK - H, mK, m - 1, m) with K = (1,...,1) and m = compute_m.
Realization fano_realization(const ToricVariety& Y, const Divisor& H,
                             AmpleConvention convention = AmpleConvention::code);

/// "key value" lines for A, B, ell, scale, seed, modifications and m.
std::string render_provenance(const Realization& G);
/// JSON with schema "toricreal.realization": provenance, polytope size and
/// the action report.
std::string render_structured(const Realization& G, const ActionReport& report);

}  // namespace toricreal
