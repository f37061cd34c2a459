#pragma once

#include <cstdint>
#include <random>

namespace eqlab {

// Independent deterministic substream `stream` of a master seed.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
}

}  // namespace eqlab
