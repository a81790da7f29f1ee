// rng.hpp
// Counter-seeded splittable random streams for reproducible ensembles.

#pragma once

#include <cstdint>

namespace levywalk {

// SplitMix64: fast 64-bit generator with a one-word state. Each trajectory
// owns its own stream, derived from (master_seed, stream_index), so results
// do not depend on scheduling.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(operator()() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream for trajectory `index` under `master_seed`.
inline SplitMix64 stream_for(std::uint64_t master_seed, std::uint64_t index) {
    return SplitMix64(mix64(master_seed ^ mix64(index + 0x9e3779b97f4a7c15ULL)));
}

} // namespace levywalk
