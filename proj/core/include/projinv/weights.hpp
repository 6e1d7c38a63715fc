#pragma once

#include <map>

#include "projinv/invariants.hpp"
#include "projinv/scalar.hpp"

namespace projinv {

/// Outcome of solving the linear exponent system for a prescribed weight.
/// Exponents are rational in general; `integral` marks whether they all lie
/// in Z (only then does the product of Delta powers make sense verbatim).
struct WeightSolution {
    bool feasible = false;
    bool integral = false;
    std::map<Triple, Rational> exponents;  // every 3-subset of {1..n}, free variables at 0
    Rational omega;

    /// Conversion to the integer exponent form; requires `integral`.
    ExponentVector as_exponent_vector() const;
};

/// Exact elimination on the (n+1) x C(n,3) system
///   sum_{S : i in S} m_S = -3 w   (i = 1..n),   sum_S m_S = -n w,
/// with triples in lexicographic order and all free variables set to zero.
WeightSolution solve_weight_system(int n, const Rational& omega);

/// True iff the stored exponents satisfy the same system at e.omega, exactly.
bool verify_exponents(int n, const ExponentVector& e);

/// The same check for a solver result, which may carry rational exponents.
bool verify_weight_solution(int n, const WeightSolution& sol);

/// All 3-element subsets of {1..n} in lexicographic order.
std::vector<Triple> all_triples(int n);

}  // namespace projinv
