#ifndef RESOLV_BITSET_HPP
#define RESOLV_BITSET_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace resolv {

// Fixed-size bitset whose width is chosen at runtime.
struct Bitset {
    int nbits = 0;
    std::vector<std::uint64_t> words;

    Bitset() = default;
    explicit Bitset(int n) : nbits(n), words((n + 63) / 64, 0) {}

    void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words) c += __builtin_popcountll(w);
        return c;
    }

    void clear() { std::fill(words.begin(), words.end(), 0); }

    // lowest set bit, or -1 when empty
    int first_set() const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words[i]));
        return -1;
    }

    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    }

    // mask for the last (possibly partial) word
    std::uint64_t tail_mask() const {
        int r = nbits & 63;
        return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    }

    bool all_set() const {
        if (nbits == 0) return true;
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            if (words[i] != ~std::uint64_t{0}) return false;
        return words.back() == tail_mask();
    }

    bool operator==(const Bitset&) const = default;
};

}  // namespace resolv

#endif
