#pragma once

// All randomness in the library flows from one user-supplied 64-bit seed.
// Child generators are derived with splitmix64 over (seed, stream id, index),
// so e.g. sample #i of a run is reproducible independently of how many other
// samples were drawn before it.

#include <cstdint>
#include <random>

namespace flexcol {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream ids keep draws for different purposes statistically independent.
enum class RngStream : std::uint64_t {
    sampler = 1,       // flex sampler coloring draws
    uniform = 2,       // sample_uniform index draws
    falsify = 3,       // adversarial list-system search
    generator = 4,     // test instance generation
};

inline std::uint64_t derive_seed(std::uint64_t seed, RngStream stream, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ 0xA076'1D64'78BD'642FULL) ^
                      splitmix64(static_cast<std::uint64_t>(stream) * 0x9E37'79B9'7F4A'7C15ULL + index));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, RngStream stream, std::uint64_t index = 0) {
    return std::mt19937_64(derive_seed(seed, stream, index));
}

}  // namespace flexcol
