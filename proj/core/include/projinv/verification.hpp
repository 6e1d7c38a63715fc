#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projinv/geometry.hpp"
#include "projinv/invariants.hpp"

namespace projinv {

enum class ArithmeticMode { Exact, Float };

/// Outcome of one randomized law check. In exact mode any failure is a
/// disproof, not noise; in float mode worst_residual tracks the largest
/// observed deviation.
struct TrialReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    bool exact_mode = true;
    double worst_residual = 0.0;
    std::vector<std::uint64_t> failing_seeds;  // per-trial seeds, enough to replay
    int redrawn = 0;                           // singular draws replaced (z_n law)
};

struct RankAttempt {
    std::uint64_t seed = 0;
    int rank = 0;
};

/// Exact-rank certificate for the Jacobian of the generating set at a
/// rational configuration; reproducible from (n, seed).
struct RankCertificate {
    int n = 0;
    bool witness = false;
    int expected_rank = 0;
    int computed_rank = 0;
    std::vector<int> pivot_columns;  // 1-based into (x1, y1, p1, q1, x2, ...)
    Configuration<Rational> config;  // configuration of the reported attempt
    std::vector<RankAttempt> attempts;

    bool passed() const { return computed_rank == expected_rank; }
};

/// Deterministic generic configuration: coordinates and gradients are small
/// rationals (numerators in [-20, 20], denominators in [1, 5]); draws are
/// rejected until points are distinct, gradients nonzero, every delta_ijk is
/// nonzero, and the z_n denominator determinants are nonzero.
Configuration<Rational> random_config(int n, std::uint64_t seed);

/// Deterministic homography with small rational entries, det != 0, and
/// w != 0 at every sample of c.
Homography<Rational> random_homography(std::uint64_t seed, const Configuration<Rational>& c);

/// Checks value(T·c) = value(c) for every generator of the n-point set.
/// One report per descriptor. Float tolerance: relative 1e-9.
std::vector<TrialReport> check_absolute(int n, int trials, std::uint64_t seed,
                                        ArithmeticMode mode = ArithmeticMode::Exact);

/// Checks the fraction-free power law z(T·c)^g · J(T) = z(c)^g, g = gcd(n, 3).
/// Float tolerance: log-residual 1e-8.
TrialReport check_zn_weight(int n, int trials, std::uint64_t seed,
                            ArithmeticMode mode = ArithmeticMode::Exact);

/// Checks gradient_line(prolong(H, s)) = w(s) · pushforward_line(H, gradient_line(s))
/// componentwise over random rational (H, s); always exact.
TrialReport prolongation_consistency(int trials, std::uint64_t seed);

/// Jacobian of the generating set at random_config(n, seed), differentiated
/// with dual numbers over exact rationals and ranked by fraction-free
/// elimination. Expected rank: 4n-8 for n >= 3, 1 for n = 2. A deficient
/// first attempt triggers one automatic reseed; both attempts are recorded.
RankCertificate invariant_jacobian_rank(int n, std::uint64_t seed);

/// Rank certificate at a caller-supplied configuration (no reseeding).
RankCertificate rank_certificate_at(const Configuration<Rational>& c, bool witness_tag = false);

/// The built-in 7-point witness configuration at which the 20x28 Jacobian
/// provably attains rank 20; used by the rank command's --paper-witness flag.
Configuration<Rational> witness_config7();

Configuration<double> to_double_config(const Configuration<Rational>& c);
Homography<double> to_double_homography(const Homography<Rational>& h);

}  // namespace projinv
