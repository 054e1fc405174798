// Brute-force reference implementations, deliberately simple and hard-
// guarded to desk scale. They exist so tests and the verify command can
// cross-check the production routines; nothing on the production path
// calls them.

#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "lcs.hpp"

namespace lcsk::oracle {

/// All strings of length at most `limit` that are subsequences of a given
/// text, sorted by length and then lexicographically.
using SubseqSet = std::vector<Text>;

inline constexpr std::uint64_t enumeration_guard = 1'000'000; // sigma^limit cap

namespace detail {

inline void check_enumeration_guard(std::uint64_t limit, Alphabet a) {
    if (sat_pow(a.size(), unsigned(std::min<std::uint64_t>(limit, 64))) > enumeration_guard ||
        limit > 64)
        throw error("enumeration guard exceeded: sigma^limit must stay at or below " +
                    std::to_string(enumeration_guard));
}

// Calls f with every string over the alphabet of length 0..limit, in
// (length, lexicographic) order.
template <class F>
void for_each_candidate(std::uint64_t limit, Alphabet a, F&& f) {
    check_enumeration_guard(limit, a);
    Text cur;
    f(cur);
    for (std::uint64_t len = 1; len <= limit; ++len) {
        cur.assign(std::size_t(len), 0);
        for (;;) {
            f(cur);
            std::size_t pos = cur.size();
            while (pos > 0 && cur[pos - 1] == Symbol(a.size() - 1)) cur[--pos] = 0;
            if (pos == 0) break;
            ++cur[pos - 1];
        }
    }
}

} // namespace detail

inline SubseqSet subseq_set(const Text& x, std::uint64_t limit, Alphabet a) {
    SubseqSet out;
    detail::for_each_candidate(limit, a, [&](const Text& y) {
        if (is_subsequence(y, x)) out.push_back(y);
    });
    return out;
}

/// True iff x1 and x2 admit exactly the same subsequences of length at
/// most `limit`.
inline bool subseq_set_equal(const Text& x1, const Text& x2, std::uint64_t limit, Alphabet a) {
    bool equal = true;
    detail::for_each_candidate(limit, a, [&](const Text& y) {
        if (equal && is_subsequence(y, x1) != is_subsequence(y, x2)) equal = false;
    });
    return equal;
}

/// Maximum weight over common subsequences, by enumerating all 2^|x|
/// subsequences of x. Guarded to |x|, |y| <= 12.
inline std::uint64_t wlcs_exhaustive(const Text& x, const Text& y, const WeightFn& w) {
    if (x.size() > 12 || y.size() > 12)
        throw error("exhaustive solver supports inputs of at most 12 symbols");
    std::uint64_t best = 0;
    Text z;
    z.reserve(x.size());
    for (std::uint32_t mask = 0; mask < (1u << x.size()); ++mask) {
        z.clear();
        std::uint64_t weight = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (mask >> i & 1) {
                z.push_back(x[i]);
                weight += w[x[i]];
            }
        }
        if (weight > best && is_subsequence(z, y)) best = weight;
    }
    return best;
}

} // namespace lcsk::oracle
