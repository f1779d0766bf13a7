// Deterministic random source for all sampling in the library.
//
// Wraps std::mt19937_64 but performs bounded sampling by explicit rejection on
// the raw 64-bit output, so a given seed produces the same draws on every
// platform and standard library (std::uniform_int_distribution is
// implementation-defined and would not).
//
// Experiments derive one generator per trial as mt19937_64(seed ^ trial_index);
// trial results are therefore reproducible from (seed, index) alone and
// independent of how trials are scheduled across threads.
#ifndef BDLRPC_RNG_HPP
#define BDLRPC_RNG_HPP

#include <cstdint>
#include <random>

namespace bdlrpc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Per-trial generator: deterministic function of (seed, index) only.
    static Rng derive(std::uint64_t seed, std::uint64_t index) {
        return Rng(seed ^ index);
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform draw from [0, n), unbiased via rejection sampling. n >= 1.
    std::uint32_t below(std::uint32_t n) {
        if (n <= 1) return 0;
        const std::uint64_t bound = n;
        // Largest multiple of n not exceeding 2^64, as a rejection threshold.
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = eng_();
        while (x > limit) x = eng_();
        return static_cast<std::uint32_t>(x % bound);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace bdlrpc

#endif // BDLRPC_RNG_HPP
