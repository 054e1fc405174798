// Generators for adversarial string families. These strings are
// incompressible for any representation that must preserve the subsequence
// set up to a length threshold, which makes them worst-case probes for the
// sketcher and useful hostile fixtures for the solvers.

#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"

namespace lcsk {

namespace detail {

// Generated strings are materialized in memory; refuse absurd requests.
inline constexpr std::uint64_t gen_length_cap = std::uint64_t(1) << 30;

} // namespace detail

/// Nested repetition family. With m = floor(limit/sigma), builds
/// x_0 = 0^m and x_k = (x_{k-1} k)^m x_{k-1}, returning x_{sigma-1}.
/// Any string with the same subsequence set up to length m*sigma has at
/// least m^sigma symbols and at least m^(sigma-1) runs.
inline Text gen_perm_hard(std::uint64_t limit, Alphabet a) {
    const unsigned sigma = a.size();
    if (limit < sigma)
        throw error("limit must be at least the alphabet size (got limit " +
                    std::to_string(limit) + " for sigma " + std::to_string(sigma) + ")");
    const std::uint64_t m = limit / sigma;

    std::uint64_t len = m;
    for (unsigned k = 1; k < sigma; ++k) len = sat_add(sat_mul(sat_add(m, 1), len), m);
    if (len > detail::gen_length_cap)
        throw error("generated string would exceed " + std::to_string(detail::gen_length_cap) +
                    " symbols");

    Text x(m, Symbol(0));
    for (unsigned k = 1; k < sigma; ++k) {
        Text next;
        next.reserve((m + 1) * x.size() + m);
        for (std::uint64_t rep = 0; rep < m; ++rep) {
            next.insert(next.end(), x.begin(), x.end());
            next.push_back(Symbol(k));
        }
        next.insert(next.end(), x.begin(), x.end());
        x = std::move(next);
    }
    return x;
}

/// Indexed-block family x(z). The vector z of length m^(sigma-1), with
/// entries below m, is spread over the leaves of a sigma-level grid:
/// level 0 blocks are 0^z[i] and level c glues m child blocks with the
/// separator symbol c between them. The resulting string has fewer than
/// m^sigma symbols yet encodes every entry of z retrievably (see gen_pat).
inline Text gen_xz(const std::vector<std::uint32_t>& z, std::uint32_t m, Alphabet a) {
    if (m == 0) throw error("block parameter m must be positive");
    const unsigned sigma = a.size();
    const std::uint64_t expected = sat_pow(m, sigma - 1);
    if (z.size() != expected)
        throw error("z must have m^(sigma-1) = " + std::to_string(expected) + " entries, got " +
                    std::to_string(z.size()));
    for (std::uint32_t v : z)
        if (v >= m)
            throw error("z entry " + std::to_string(v) + " out of range, entries must be below " +
                        std::to_string(m));

    Text out;
    auto build = [&](auto&& self, unsigned level, std::uint64_t index) -> void {
        if (level == 0) {
            out.insert(out.end(), z[index], Symbol(0));
            return;
        }
        for (std::uint32_t j = 0; j + 1 < m; ++j) {
            self(self, level - 1, std::uint64_t(m) * index + j);
            out.push_back(Symbol(level));
        }
        self(self, level - 1, std::uint64_t(m) * index + m - 1);
    };
    build(build, sigma - 1, 0);
    return out;
}

/// Probe string pat(index, y) for the x(z) family: writing the index in
/// base m as sum of digits d_j * m^j, the probe is
///
///   (sigma-1)^d_{sigma-2} ... 2^d_1 1^d_0  y  1^(m-1-d_0) 2^(m-1-d_1) ...
///
/// so that pat(index, y) is a subsequence of x(z) exactly when y is a
/// subsequence of 0^z[index]. The payload y may use only symbol 0.
inline Text gen_pat(std::uint64_t index, const Text& y, std::uint32_t m, Alphabet a) {
    if (m == 0) throw error("block parameter m must be positive");
    const unsigned sigma = a.size();
    const std::uint64_t max_index = sat_pow(m, sigma - 1);
    if (index >= max_index)
        throw error("pattern index " + std::to_string(index) + " out of range, must be below " +
                    std::to_string(max_index));
    for (Symbol c : y)
        if (c != 0) throw error("pattern payload must use only symbol 0");

    std::vector<std::uint32_t> digits(sigma - 1, 0);
    std::uint64_t v = index;
    for (unsigned j = 0; j + 1 < sigma; ++j) {
        digits[j] = std::uint32_t(v % m);
        v /= m;
    }

    Text out;
    for (unsigned j = 1; j < sigma; ++j)
        out.insert(out.end(), digits[sigma - 1 - j], Symbol(sigma - j));
    out.insert(out.end(), y.begin(), y.end());
    for (unsigned j = 1; j < sigma; ++j)
        out.insert(out.end(), m - 1 - digits[j - 1], Symbol(j));
    return out;
}

} // namespace lcsk
