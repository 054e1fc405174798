// Unweighted primitives (subsequence test, LCS length) and the two-party
// decision protocol that answers "LCS(x, y) >= limit" from the sketches of
// x and y alone.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "sketch.hpp"

namespace lcsk {

/// True iff y can be obtained from x by deleting symbols. Greedy
/// left-to-right matching, O(|x|) time.
inline bool is_subsequence(const Text& y, const Text& x) {
    std::size_t matched = 0;
    for (Symbol c : x) {
        if (matched == y.size()) break;
        if (y[matched] == c) ++matched;
    }
    return matched == y.size();
}

/// Length of a longest common subsequence. Two-row dynamic program,
/// O(|x||y|) time and O(min(|x|,|y|)) space.
inline std::size_t lcs_length(const Text& x, const Text& y) {
    const Text& rows = x.size() >= y.size() ? x : y;
    const Text& cols = x.size() >= y.size() ? y : x;
    if (cols.empty()) return 0;

    std::vector<std::size_t> prev(cols.size() + 1, 0);
    std::vector<std::size_t> cur(cols.size() + 1, 0);
    for (std::size_t i = 1; i <= rows.size(); ++i) {
        for (std::size_t j = 1; j <= cols.size(); ++j) {
            cur[j] = rows[i - 1] == cols[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[cols.size()];
}

struct DecisionReport {
    bool answer;
    std::uint64_t sketch_x_bits;
    std::uint64_t sketch_y_bits;
    std::size_t lcs_of_sketches;
};

/// Referee side of the protocol: decodes both sketches and runs the
/// quadratic DP on them. Sound and complete for the threshold the sketches
/// were built with, because each sketch preserves all subsequences of
/// length <= limit.
inline DecisionReport decide_from_sketches(const RleString& sx, const RleString& sy, Alphabet a,
                                           std::uint64_t limit) {
    DecisionReport rep;
    rep.sketch_x_bits = sketch_bits(sx, a, limit);
    rep.sketch_y_bits = sketch_bits(sy, a, limit);
    rep.lcs_of_sketches = lcs_length(rle_decode(sx), rle_decode(sy));
    rep.answer = std::uint64_t(rep.lcs_of_sketches) >= limit;
    return rep;
}

/// Full protocol: sketch both inputs at the decision threshold, then let
/// the referee decide. The answer always agrees with lcs_length(x, y) >= limit.
inline DecisionReport lcs_decide_sketched(const Text& x, const Text& y, Alphabet a,
                                          std::uint64_t limit) {
    return decide_from_sketches(sketch_stream(x, a, limit), sketch_stream(y, a, limit), a, limit);
}

} // namespace lcsk
