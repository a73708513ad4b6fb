#pragma once

// Oracles and generators shared by the test suites. The oracles use plain
// Gaussian elimination and subset enumeration only, so they are independent
// of the double description engine and the normal form code under test.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toricreal/polytope.hpp"
#include "toricreal/toric.hpp"

namespace oracle {

using toricreal::Halfspace;
using toricreal::Integer;
using toricreal::IntVector;
using toricreal::Rational;
using toricreal::RatVector;

/// Unique solution of the square system A x = b, if any.
std::optional<RatVector> solve_square(std::vector<RatVector> A, RatVector b);

/// Dimension of the affine hull of the points (-1 for none).
int affine_rank(const std::vector<RatVector>& points);

/// Vertices of {x : h(x) >= 0 for h in hs, e(x) == 0 for e in eqs} by
/// enumerating all d x d subsystems. Sorted and deduplicated.
std::vector<RatVector> vertices(const std::vector<Halfspace>& hs, std::size_t d,
                                const std::vector<Halfspace>& eqs = {});

/// Facet count of a full-dimensional polytope given by (possibly redundant)
/// halfspaces: distinct tight vertex sets of affine rank d - 1.
std::size_t facet_count(const std::vector<Halfspace>& hs, std::size_t d);

/// Eliminates coordinate j (the result lives in R^(d-1)).
std::vector<Halfspace> fourier_motzkin(const std::vector<Halfspace>& hs, std::size_t d, std::size_t j);

/// Hull of a finite point set by brute force: all hyperplanes through d
/// affinely independent points that leave every point on one side.
std::vector<Halfspace> hull_halfspaces(const std::vector<RatVector>& points, std::size_t d);

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
toricreal::Rational rational(Rng& rng, int lo, int hi, int max_den);

/// `count` integer points in [-range, range]^dim.
std::vector<toricreal::RatVector> points(Rng& rng, std::size_t dim, std::size_t count, int range);

/// A full-dimensional lattice polytope in dimension dim with a handful of vertices.
toricreal::Polytope polytope(Rng& rng, std::size_t dim);

/// A projective toric variety (normal fan of a random polytope) together
/// with an ample divisor on it.
struct PolarizedVariety {
  toricreal::ToricVariety X;
  toricreal::Divisor ample;
};
PolarizedVariety polarized(Rng& rng, std::size_t dim);

/// A simplicial projective toric variety with an ample divisor: the normal
/// fan of a random simplicial polytope.
PolarizedVariety simplicial_polarized(Rng& rng, std::size_t dim);

}  // namespace gen

namespace fixtures {

toricreal::ToricVariety p2();
toricreal::ToricVariety p1xp1();
/// Hirzebruch surface F_a with rays (1,0), (0,1), (-1,a), (0,-1).
toricreal::ToricVariety hirzebruch(int a);
toricreal::ToricVariety batyrev33();
/// P(O + O(1) + O(1)) over P^2 with its rays in sorted order.
toricreal::ToricVariety p2_bundle();
/// [0,3]^4 cut at depth 1 at the corners 0 and (3,3,3,3).
toricreal::Polytope cremona();

toricreal::Divisor divisor(std::initializer_list<int> coefficients);

}  // namespace fixtures
