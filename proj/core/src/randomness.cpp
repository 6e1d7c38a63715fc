#include "projinv/randomness.hpp"

#include <limits>
#include <stdexcept>

namespace projinv {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    return splitmix64(splitmix64(seed ^ 0xa0761d6478bd642fULL) + splitmix64(stream) * 3 +
                      splitmix64(substream ^ 0xe7037ed1a0b428dbULL));
}

long Rng::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
        draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<long>(draw % range);
}

Rational random_rational(Rng& rng, long num_lo, long num_hi, long den_lo, long den_hi) {
    return make_rational(rng.uniform(num_lo, num_hi), rng.uniform(den_lo, den_hi));
}

}  // namespace projinv
