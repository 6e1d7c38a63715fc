#pragma once

#include <cstdint>
#include <random>

#include "projinv/scalar.hpp"

namespace projinv {

/// Stateless seed mixing (splitmix64 finalizer); lets independent trials and
/// sub-draws derive their own streams from one master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

/// Deterministic generator. Draws raw mt19937_64 words and reduces by
/// rejection, so sequences are identical across platforms and compilers
/// (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi);

private:
    std::mt19937_64 eng_;
};

/// Small random rational with numerator in [num_lo, num_hi] and denominator
/// in [den_lo, den_hi], reduced to lowest terms.
Rational random_rational(Rng& rng, long num_lo, long num_hi, long den_lo, long den_hi);

}  // namespace projinv
