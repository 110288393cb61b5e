#ifndef EXOTIC_RNG_HPP
#define EXOTIC_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace exotic {

// Deterministic seeded RNG. mt19937_64 is fully specified by the standard,
// and the bounded sampling below avoids std::uniform_int_distribution (whose
// output is implementation-defined), so identical seeds give identical
// streams on every platform. Never shared: pass by reference explicitly.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi], unbiased via rejection sampling.
    long uniform_int(long lo, long hi) {
        if (lo > hi)
            throw std::invalid_argument("SeededRng::uniform_int: empty range");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) // full 64-bit range
            return static_cast<long>(next_u64());
        const std::uint64_t limit = range * (UINT64_MAX / range);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<long>(v % range);
    }

    // Independent child stream for (seed, index). Used to make parallel and
    // serial per-label work produce identical results.
    SeededRng child(std::uint64_t index) const {
        return SeededRng(mix(seed_, index));
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 finalizer over the combined value
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace exotic

#endif
