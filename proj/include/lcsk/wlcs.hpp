// Weighted LCS solvers: the rectangular O(nm) dynamic program, an O(rm)
// algorithm that consumes one run-length encoded input, and a dispatcher
// that compresses the longer string first whenever that is estimated to be
// cheaper, for a combined O(min{nm, n + m^sigma}) bound.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

#include "core.hpp"
#include "sketch.hpp"

namespace lcsk {

/// counts[c][j] = number of occurrences of c among the first j symbols of y.
using PrefixCounts = std::vector<std::vector<std::uint32_t>>;

inline PrefixCounts prefix_counts(const Text& y, Alphabet a) {
    if (y.size() >= std::uint64_t(1) << 32) throw error("text too long for prefix counting");
    PrefixCounts table(a.size(), std::vector<std::uint32_t>(y.size() + 1, 0));
    for (unsigned c = 0; c < a.size(); ++c) {
        for (std::size_t j = 1; j <= y.size(); ++j)
            table[c][j] = table[c][j - 1] + (y[j - 1] == Symbol(c) ? 1 : 0);
    }
    return table;
}

namespace detail {

inline void check_score_overflow(std::uint64_t shorter_len, const WeightFn& w) {
    if (sat_mul(shorter_len, w.max_weight()) >= std::uint64_t(1) << 63)
        throw error("score overflow: shorter length times maximum weight must stay below 2^63");
}

} // namespace detail

/// Maximum total weight over common subsequences of x and y. Standard cell
/// rule (match adds the symbol weight, otherwise drop one side), two-row
/// space, O(|x||y|) time.
inline std::uint64_t wlcs_dp(const Text& x, const Text& y, const WeightFn& w) {
    if (x.empty() || y.empty()) return 0;
    detail::check_score_overflow(std::min(x.size(), y.size()), w);

    const Text& rows = x.size() >= y.size() ? x : y;
    const Text& cols = x.size() >= y.size() ? y : x;
    std::vector<std::uint64_t> prev(cols.size() + 1, 0);
    std::vector<std::uint64_t> cur(cols.size() + 1, 0);
    for (std::size_t i = 1; i <= rows.size(); ++i) {
        for (std::size_t j = 1; j <= cols.size(); ++j) {
            cur[j] = rows[i - 1] == cols[j - 1] ? prev[j - 1] + w[rows[i - 1]]
                                                : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[cols.size()];
}

struct DequeCounters {
    std::uint64_t insertions = 0;
    std::uint64_t removals = 0;
};

/// WLCS of a run-length encoded x against an uncompressed y in O(rm) time.
///
/// Row i extends the answer by the i-th run c^l of x. Writing cnt(k, j) for
/// the occurrences of c in y[k+1..j], the row recurrence is
///
///   D(i, j) = max over k <= j with cnt(k, j) <= l of
///             D(i-1, k) + W(c) * cnt(k, j)
///           = W(c) * cnt(0, j) + max over the same k of h(k),
///
/// with height h(k) = D(i-1, k) - W(c) * cnt(0, k). The feasible k form a
/// window whose ends only move right as j grows, so the maximum height is
/// maintained with a monotonic deque: evict from the left while the window
/// constraint fails, evict from the right while the new height dominates,
/// then append j. Each j is inserted exactly once, so the deque work is
/// O(m) per row.
inline std::uint64_t wlcs_rle(const RleString& x, const Text& y, const WeightFn& w,
                              DequeCounters* counters = nullptr, bool check_window = false) {
    if (!rle_is_canonical(x)) throw error("run-length encoded input is not canonical");
    if (x.empty() || y.empty()) return 0;
    detail::check_score_overflow(y.size(), w);

    const Alphabet a(w.sigma());
    const PrefixCounts counts = prefix_counts(y, a);
    const std::size_t m = y.size();

    std::vector<std::uint64_t> prev(m + 1, 0);
    std::vector<std::uint64_t> cur(m + 1, 0);

    struct WindowEntry {
        std::uint32_t pos;
        std::int64_t height;
    };
    std::vector<WindowEntry> window(m + 1);

    for (const Run& run : x) {
        a.require(run.sym);
        const std::int64_t weight = std::int64_t(w[run.sym]);
        const std::vector<std::uint32_t>& pc = counts[run.sym];

        // Window over k = 0..j, reinitialized per row because heights
        // depend on the run symbol and the previous row.
        std::size_t head = 0, tail = 0;
        window[tail++] = WindowEntry{0, 0};

        for (std::size_t j = 1; j <= m; ++j) {
            while (head < tail && std::uint64_t(pc[j] - pc[window[head].pos]) > run.len) {
                ++head;
                if (counters) ++counters->removals;
            }
            const std::int64_t hj = std::int64_t(prev[j]) - weight * std::int64_t(pc[j]);
            while (head < tail && window[tail - 1].height <= hj) {
                --tail;
                if (counters) ++counters->removals;
            }
            window[tail++] = WindowEntry{std::uint32_t(j), hj};
            if (counters) ++counters->insertions;

            if (check_window) {
                // Linear rescan of the active window; the leftmost deque
                // entry must attain its maximum height.
                std::int64_t best = std::numeric_limits<std::int64_t>::min();
                for (std::size_t k = j + 1; k-- > 0;) {
                    if (std::uint64_t(pc[j] - pc[k]) > run.len) break;
                    best = std::max(best, std::int64_t(prev[k]) - weight * std::int64_t(pc[k]));
                }
                if (best != window[head].height)
                    throw error("window maximum mismatch in run-length solver");
            }

            cur[j] = std::uint64_t(weight * std::int64_t(pc[j]) + window[head].height);
            assert(cur[j] >= cur[j - 1]);
            assert(cur[j] >= prev[j]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

enum class WlcsPath { trivial, dp, rle };

inline const char* to_string(WlcsPath p) {
    switch (p) {
        case WlcsPath::dp: return "dp";
        case WlcsPath::rle: return "rle";
        default: return "trivial";
    }
}

struct WlcsAutoStats {
    WlcsPath path = WlcsPath::trivial;
    std::size_t compressed_runs = 0;
    DequeCounters deque;
};

/// Solves WLCS by whichever route costs less under an exact operation
/// count: the rectangular DP at n*m, or compressing the longer string to a
/// sketch at threshold m and running the O(rm) solver, estimated at
/// n + m * min(runs(x), 2*(m+1)^(sigma-1) - 1). Both routes return the same
/// value: every common subsequence has length at most m, and the sketch
/// preserves all subsequences up to that length.
inline std::uint64_t wlcs_auto(const Text& x, const Text& y, const WeightFn& w,
                               WlcsAutoStats* stats = nullptr) {
    if (stats) *stats = WlcsAutoStats{};
    const Text& longer = x.size() >= y.size() ? x : y;
    const Text& shorter = x.size() >= y.size() ? y : x;
    if (shorter.empty()) return 0;
    detail::check_score_overflow(shorter.size(), w);

    const Alphabet a(w.sigma());
    const std::uint64_t n = longer.size();
    const std::uint64_t m = shorter.size();
    const std::uint64_t run_estimate =
        std::min<std::uint64_t>(count_runs(longer), sketch_run_bound(a, m));
    const std::uint64_t dp_cost = sat_mul(n, m);
    const std::uint64_t rle_cost = sat_add(n, sat_mul(m, run_estimate));

    if (dp_cost <= rle_cost) {
        if (stats) stats->path = WlcsPath::dp;
        return wlcs_dp(longer, shorter, w);
    }
    RleString compressed = sketch_stream(longer, a, m);
    if (stats) {
        stats->path = WlcsPath::rle;
        stats->compressed_runs = compressed.size();
    }
    return wlcs_rle(compressed, shorter, w, stats ? &stats->deque : nullptr);
}

} // namespace lcsk
