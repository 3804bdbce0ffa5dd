#pragma once

#include <cstdint>
#include <span>

namespace subcheck {

// splitmix64: the fixed, documented generator behind every seeded fixture.
// Chosen for exact cross-platform reproducibility; identical seeds must
// yield byte-identical instances everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound > 0. Multiply-shift reduction,
    // no rejection, fully deterministic.
    std::uint64_t below(std::uint64_t bound) {
        return std::uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Fisher-Yates.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = std::size_t(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    static constexpr const char* name = "splitmix64";

private:
    std::uint64_t state_;
};

}  // namespace subcheck
