#pragma once

#include <vector>

#include "projinv/scalar.hpp"

namespace projinv {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Reduced row echelon form in place over the rationals.
/// Returns the pivot columns (0-based, ascending).
std::vector<int> rref(RatMatrix& m);

/// Rank by fraction-free (Bareiss) elimination with column pivoting.
/// All intermediate divisions are exact over the integers. Pivot columns
/// (0-based) are appended to *pivot_cols when given.
int bareiss_rank(IntMatrix m, std::vector<int>* pivot_cols = nullptr);

/// Scales each row by the lcm of its denominators; preserves row space.
IntMatrix clear_denominators(const RatMatrix& m);

}  // namespace projinv
