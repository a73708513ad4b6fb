#pragma once

// Versioned text formats. Blank lines and anything after '#' are ignored.
//
//   toricreal-fan 1            toricreal-polytope 1
//   dim 2                      dim 2
//   rays 3                     vertices 3
//   1 0                        0 0
//   0 1                        1/2 0
//   -1 -1                      0 1
//   cones 3                    halfspaces 3
//   0 1                        -2 -1 ; 1
//   0 2                        0 1 ; 0
//   1 2                        1 0 ; 0
//                              equations 0
//
//   toricreal-relations 1
//   rays 7
//   v2 + v3 + v4 = v1
//   ...
//
// Polytopes are rebuilt from their vertices on reading; the halfspace block
// is checked against the recomputed facets.

#include <iosfwd>
#include <string>
#include <vector>

#include "toricreal/fan.hpp"
#include "toricreal/polytope.hpp"
#include "toricreal/toric.hpp"

namespace toricreal {

/// All readers throw ParseError on malformed input.
Fan read_fan(std::istream& in);
void write_fan(std::ostream& out, const Fan& fan);

std::vector<PrimitiveRelation> read_relations(std::istream& in);

Polytope read_polytope(std::istream& in);
void write_polytope(std::ostream& out, const Polytope& P);

/// OFF export of a full-dimensional polytope in R^3, vertex coordinates as
/// decimals. Throws GeometryError(invalid_argument) in other dimensions.
void write_off(std::ostream& out, const Polytope& P);

Fan load_fan(const std::string& path);
std::vector<PrimitiveRelation> load_relations(const std::string& path);
Polytope load_polytope(const std::string& path);

}  // namespace toricreal
