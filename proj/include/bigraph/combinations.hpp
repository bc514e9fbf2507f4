#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bigraph {

/// k-subsets of bit positions [0, cells), cells <= 64, as uint64 masks.
/// Increasing mask value equals colexicographic subset order, so the rank
/// space [0, C(cells, k)) can be split into contiguous chunks and each chunk
/// entered directly via unranking.
namespace combi {

/// C(top, k) as uint64 via a cached Pascal table; every value with
/// top <= 64 fits (the peak is C(64,32) ~ 1.8e18).
inline std::uint64_t binomial_u64(int top, int k) {
    if (top < 0 || top > 64) throw std::out_of_range("binomial_u64: top must be in [0, 64]");
    if (k < 0 || k > top) return 0;
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    return table[top][k];
}

inline std::uint64_t first_mask(int k) {
    return k == 0 ? 0 : (k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

/// Gosper's hack: next mask with the same popcount in increasing value order.
/// Must not be called past the last combination.
inline std::uint64_t next_mask(std::uint64_t m) {
    std::uint64_t lowest = m & (~m + 1);
    std::uint64_t ripple = m + lowest;
    std::uint64_t ones = m ^ ripple;
    return ripple | ((ones >> 2) / lowest);
}

/// Mask of the combination with the given colex rank.
inline std::uint64_t unrank(std::uint64_t rank, int cells, int k) {
    if (rank >= binomial_u64(cells, k))
        throw std::out_of_range("combination unrank: rank out of range");
    std::uint64_t mask = 0;
    int c = cells - 1;
    for (int i = k; i >= 1; --i) {
        while (binomial_u64(c, i) > rank) --c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial_u64(c, i);
        --c;
    }
    return mask;
}

}  // namespace combi
}  // namespace bigraph
