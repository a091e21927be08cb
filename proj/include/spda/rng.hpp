#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace spda {

/// Mixes (seed, stream) into an independent sub-seed. splitmix64 finalizer;
/// stable across platforms, so Monte-Carlo trials are reproducible.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic PRNG. std::mt19937_64 output is fully specified by the
/// standard; bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, whose sequence is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    Rng(uint64_t seed, uint64_t stream) : engine_(derive_seed(seed, stream)) {}

    uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from [0, bound).
    uint64_t uniform_below(uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("uniform_below: bound must be positive");
        }
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    void fill_bytes(std::span<uint8_t> out) {
        size_t i = 0;
        while (i < out.size()) {
            uint64_t word = engine_();
            for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
                out[i] = static_cast<uint8_t>(word >> (8 * b));
            }
        }
    }

    /// Unbiased Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (size_t i = values.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace spda
