#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace contextlab {

inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Independent stream for a named subtask of a run: mixes the label into
/// the master seed, so adding subtasks never shifts other streams.
inline uint64_t fork_seed(uint64_t seed, std::string_view label) {
    uint64_t s = seed ^ fnv1a(label);
    return splitmix64_next(s);
}

inline uint64_t fork_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
    return splitmix64_next(s);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace contextlab
