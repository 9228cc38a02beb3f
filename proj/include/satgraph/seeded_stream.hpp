#ifndef SATGRAPH_SEEDED_STREAM_HPP
#define SATGRAPH_SEEDED_STREAM_HPP

#include <cstdint>

namespace satgraph {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent child seed for substream `index` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

/**
 * Counter-based word source: word(i) is the i-th SplitMix64 output for the
 * key, computable in any order.
 */
class CounterStream {
public:
    explicit constexpr CounterStream(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t word(std::uint64_t counter) const noexcept {
        return mix64(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    }

private:
    std::uint64_t key_;
};

}  // namespace satgraph

#endif  // SATGRAPH_SEEDED_STREAM_HPP
