#ifndef SATGRAPH_BITS_HPP
#define SATGRAPH_BITS_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace satgraph {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Mask of the valid bits in the last word of a `bits`-wide set.
constexpr Word tail_mask(std::size_t bits) noexcept {
    const std::size_t rem = bits % kWordBits;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

/// Bits strictly above position `pos` within its word.
constexpr Word bits_above(std::size_t pos) noexcept {
    const std::size_t r = pos % kWordBits;
    return r == kWordBits - 1 ? Word{0} : ~Word{0} << (r + 1);
}

inline bool test_bit(std::span<const Word> set, std::size_t pos) noexcept {
    return (set[pos / kWordBits] >> (pos % kWordBits)) & 1U;
}

inline void set_bit(std::span<Word> set, std::size_t pos) noexcept {
    set[pos / kWordBits] |= Word{1} << (pos % kWordBits);
}

inline void clear_bit(std::span<Word> set, std::size_t pos) noexcept {
    set[pos / kWordBits] &= ~(Word{1} << (pos % kWordBits));
}

/// Sets positions [lo, lo + len).
inline void set_range(std::span<Word> set, std::size_t lo, std::size_t len) noexcept {
    std::size_t pos = lo;
    const std::size_t end = lo + len;
    while (pos < end) {
        const std::size_t off = pos % kWordBits;
        const std::size_t take = std::min(kWordBits - off, end - pos);
        const Word chunk = take == kWordBits ? ~Word{0} : ((Word{1} << take) - 1) << off;
        set[pos / kWordBits] |= chunk;
        pos += take;
    }
}

/// Copies bits [lo, lo + len) of `src` into `out` starting at bit 0.
/// `out` must hold words_for(len) words; unused high bits are cleared.
inline void extract_bits(std::span<const Word> src, std::size_t lo, std::size_t len,
                         std::span<Word> out) noexcept {
    const std::size_t out_words = words_for(len);
    const std::size_t shift = lo % kWordBits;
    const std::size_t base = lo / kWordBits;
    for (std::size_t w = 0; w < out_words; ++w) {
        Word v = src[base + w] >> shift;
        if (shift != 0 && base + w + 1 < src.size()) {
            v |= src[base + w + 1] << (kWordBits - shift);
        }
        out[w] = v;
    }
    out[out_words - 1] &= tail_mask(len);
}

inline bool any_bit(std::span<const Word> set) noexcept {
    for (Word w : set) {
        if (w != 0) return true;
    }
    return false;
}

/// In-place transpose of a 64x64 bit block: bit j of a[i] swaps with bit i of a[j].
inline void transpose64(std::array<Word, 64>& a) noexcept {
    Word m = 0x00000000FFFFFFFFULL;
    for (std::size_t j = 32; j != 0; j >>= 1, m ^= (m << j)) {
        for (std::size_t k = 0; k < 64; k = ((k | j) + 1) & ~j) {
            const Word t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

}  // namespace satgraph

#endif  // SATGRAPH_BITS_HPP
