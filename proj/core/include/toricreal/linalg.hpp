#pragma once

// Exact integer and rational linear algebra.

#include <optional>
#include <vector>

#include "toricreal/exact.hpp"

namespace toricreal {

/// U * A * V == D with D diagonal, d_i | d_{i+1}, d_i >= 0 and U, V unimodular.
struct SmithForm {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;
  std::size_t rank = 0;
};

/// Pivots on the entry of smallest nonzero absolute value; ties go to the
/// lowest (row, col) in row-major order.
SmithForm smith_normal_form(const IntegerMatrix& A);

/// Row-style Hermite normal form: H == U * A, H in row echelon form with
/// positive pivots, entries above a pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntegerMatrix& A);

/// Saturated Z-basis of {x in Z^cols : A x = 0}, returned in Hermite-reduced form.
std::vector<IntVector> integer_kernel(const IntegerMatrix& A);

/// Basis of the rational null space {x : A x = 0}, derived from the reduced
/// row echelon form (one vector per free column).
std::vector<RatVector> rational_kernel(const RationalMatrix& A);

/// Reduced row echelon form. `pivots` receives the pivot column of each nonzero row.
RationalMatrix rref(RationalMatrix A, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& A);
std::size_t rank(const IntegerMatrix& A);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

/// Some exact solution of A x = b, or nullopt if the system is inconsistent.
std::optional<RatVector> solve_rational(const RationalMatrix& A, const RatVector& b);
/// Some integral solution of A x = b, or nullopt.
std::optional<IntVector> solve_integer(const IntegerMatrix& A, const IntVector& b);

Rational determinant(const RationalMatrix& A);
Integer determinant(const IntegerMatrix& A);
std::optional<RationalMatrix> inverse(const RationalMatrix& A);

/// A unimodular matrix whose last row is the primitive vector u.
IntegerMatrix unimodular_completion(const IntVector& u);

}  // namespace toricreal
