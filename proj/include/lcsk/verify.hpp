// Desk-scale verification suite: one check per acceptance criterion, each
// reporting a single pass/fail line. Shared by the acceptance test binary
// and the `lcsk verify` command. Seeds are fixed so failures reproduce.

#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "hardgen.hpp"
#include "lcs.hpp"
#include "oracle.hpp"
#include "sketch.hpp"
#include "wlcs.hpp"

namespace lcsk::verify {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << s << "s";
    return os.str();
}

inline Text random_text(std::mt19937_64& rng, std::size_t max_len, unsigned sigma) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<unsigned> sym_dist(0, sigma - 1);
    Text x(len_dist(rng));
    for (Symbol& c : x) c = Symbol(sym_dist(rng));
    return x;
}

inline WeightFn random_weights(std::mt19937_64& rng, Alphabet a, std::uint64_t max_w) {
    std::uniform_int_distribution<std::uint64_t> dist(1, max_w);
    std::vector<std::uint64_t> w(a.size());
    for (auto& v : w) v = dist(rng);
    return WeightFn(a, std::move(w));
}

} // namespace detail

/// Exhaustive over every binary string of length up to 12 and every limit
/// up to 4: the sketch admits exactly the same subsequences up to the limit.
inline CriterionResult sketch_preservation_exhaustive() {
    const auto t0 = detail::Clock::now();
    const Alphabet a(2);
    std::uint64_t checked = 0, mismatches = 0;
    for (unsigned n = 0; n <= 12; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            Text x(n);
            for (unsigned i = 0; i < n; ++i) x[i] = Symbol((bits >> i) & 1);
            for (std::uint64_t limit = 0; limit <= 4; ++limit) {
                const Text compressed = rle_decode(sketch_stream(x, a, limit));
                if (!oracle::subseq_set_equal(x, compressed, limit, a)) ++mismatches;
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << checked << " (string, limit) pairs, " << mismatches << " mismatches ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {1, "sketch preserves bounded subsequence sets (exhaustive)", mismatches == 0,
            os.str()};
}

namespace detail {

// Fuzz corpus shared by the bound and idempotence checks.
inline std::uint64_t bound_corpus_seed(unsigned sigma) { return 0xC0FFEEull + sigma; }

template <class F>
void for_bound_corpus(F&& f) {
    for (unsigned sigma : {2u, 3u}) {
        std::mt19937_64 rng(bound_corpus_seed(sigma));
        std::uniform_int_distribution<std::uint64_t> limit_dist(0, 8);
        for (int rep = 0; rep < 10'000; ++rep) {
            Text x = random_text(rng, 500, sigma);
            std::uint64_t limit = limit_dist(rng);
            f(Alphabet(sigma), x, limit);
        }
    }
}

} // namespace detail

/// Fuzzed sketches respect the run-count bound 2*(limit+1)^(sigma-1) - 1,
/// the per-run length bound, and the total length bound limit * runs.
inline CriterionResult sketch_run_and_length_bounds() {
    const auto t0 = detail::Clock::now();
    std::uint64_t checked = 0, violations = 0;
    detail::for_bound_corpus([&](Alphabet a, const Text& x, std::uint64_t limit) {
        const RleString sk = sketch_stream(x, a, limit);
        bool ok = sk.size() <= sketch_run_bound(a, limit);
        for (const Run& run : sk) ok = ok && run.len <= limit;
        ok = ok && rle_length(sk) <= sat_mul(limit, sk.size());
        if (!ok) ++violations;
        ++checked;
    });
    std::ostringstream os;
    os << checked << " sketches, " << violations << " violations ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {2, "sketch run count and length bounds", violations == 0, os.str()};
}

/// Sketching a sketch changes nothing, on the same fuzz corpus.
inline CriterionResult sketch_idempotence() {
    const auto t0 = detail::Clock::now();
    std::uint64_t checked = 0, violations = 0;
    detail::for_bound_corpus([&](Alphabet a, const Text& x, std::uint64_t limit) {
        const RleString sk = sketch_stream(x, a, limit);
        if (sketch_stream(rle_decode(sk), a, limit) != sk) ++violations;
        ++checked;
    });
    std::ostringstream os;
    os << checked << " sketches, " << violations << " violations ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {3, "sketch idempotence", violations == 0, os.str()};
}

/// The sketch-based decision "LCS >= limit" agrees with the exact DP on
/// fuzzed inputs.
inline CriterionResult decision_protocol_soundness() {
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(0xDEC1DEull);
    std::uniform_int_distribution<unsigned> sigma_dist(2, 3);
    std::uniform_int_distribution<std::uint64_t> limit_dist(0, 6);
    std::uint64_t checked = 0, disagreements = 0;
    for (int rep = 0; rep < 10'000; ++rep) {
        const Alphabet a(sigma_dist(rng));
        const Text x = detail::random_text(rng, 64, a.size());
        const Text y = detail::random_text(rng, 64, a.size());
        const std::uint64_t limit = limit_dist(rng);
        const DecisionReport rep_out = lcs_decide_sketched(x, y, a, limit);
        const bool exact = std::uint64_t(lcs_length(x, y)) >= limit;
        if (rep_out.answer != exact) ++disagreements;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " triples, " << disagreements << " disagreements ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {4, "sketched decision agrees with exact LCS", disagreements == 0, os.str()};
}

/// The nested repetition string admits no shorter equivalent: no binary
/// string below 4 symbols, and no string of fewer than 2 runs, has the same
/// subsequence set up to length 4; at limit 8 the sketch keeps at least 16
/// symbols in at least 4 runs.
inline CriterionResult hard_string_incompressibility() {
    const auto t0 = detail::Clock::now();
    const Alphabet a(2);
    bool ok = true;
    std::ostringstream os;

    const Text x = gen_perm_hard(4, a);
    ok = ok && text_to_digits(x) == "00100100";

    std::uint64_t shorter_equivalents = 0;
    for (unsigned n = 0; n < 4; ++n) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            Text z(n);
            for (unsigned i = 0; i < n; ++i) z[i] = Symbol((bits >> i) & 1);
            if (oracle::subseq_set_equal(x, z, 4, a)) ++shorter_equivalents;
        }
    }
    // Single-run candidates c^j; their subsequence sets up to length 4
    // stabilize at j = 4, so scanning j <= 16 settles all run counts < 2.
    std::uint64_t single_run_equivalents = 0;
    for (Symbol c : {Symbol(0), Symbol(1)}) {
        for (unsigned j = 1; j <= 16; ++j) {
            if (oracle::subseq_set_equal(x, Text(j, c), 4, a)) ++single_run_equivalents;
        }
    }
    ok = ok && shorter_equivalents == 0 && single_run_equivalents == 0;

    const RleString sk = sketch_stream(gen_perm_hard(8, a), a, 8);
    ok = ok && rle_length(sk) >= 16 && sk.size() >= 4;

    os << shorter_equivalents + single_run_equivalents << " spurious equivalents, limit-8 sketch "
       << rle_length(sk) << " symbols in " << sk.size() << " runs ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {5, "hard strings are incompressible at desk scale", ok, os.str()};
}

/// Probe strings read the hidden vector back out of the indexed-block
/// family: pat(i, 0^t) embeds into x(z) exactly when t <= z[i].
inline CriterionResult indexed_pattern_probes() {
    const auto t0 = detail::Clock::now();
    const Alphabet a(3);
    std::mt19937_64 rng(0x9A77E51ull);
    std::uniform_int_distribution<std::uint32_t> entry_dist(0, 2);
    std::uint64_t checked = 0, mismatches = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<std::uint32_t> z(9);
        for (auto& v : z) v = entry_dist(rng);
        const Text x = gen_xz(z, 3, a);
        for (std::uint64_t i = 0; i < 9; ++i) {
            for (std::uint32_t t = 0; t <= 3; ++t) {
                const bool embeds = is_subsequence(gen_pat(i, Text(t, 0), 3, a), x);
                if (embeds != (t <= z[i])) ++mismatches;
                ++checked;
            }
        }
    }

    bool frame_ok = true;
    for (std::uint32_t t = 0; t <= 2; ++t) {
        Text expected{2, 1};
        expected.insert(expected.end(), t, Symbol(0));
        expected.push_back(1);
        expected.push_back(2);
        frame_ok = frame_ok && gen_pat(4, Text(t, 0), 3, a) == expected;
    }

    std::ostringstream os;
    os << checked << " probes, " << mismatches << " mismatches, frame "
       << (frame_ok ? "ok" : "wrong") << " (" << detail::fmt_seconds(detail::seconds_since(t0))
       << ")";
    return {6, "indexed pattern probes recover hidden entries", mismatches == 0 && frame_ok,
            os.str()};
}

/// The run-length solver, the rectangular DP, and the dispatcher return the
/// same score on fuzzed instances.
inline CriterionResult weighted_engine_agreement() {
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(0xA9EE77ull);
    std::uniform_int_distribution<unsigned> sigma_dist(2, 4);
    std::uint64_t checked = 0, disagreements = 0;
    for (int rep = 0; rep < 10'000; ++rep) {
        const Alphabet a(sigma_dist(rng));
        const Text x = detail::random_text(rng, 200, a.size());
        const Text y = detail::random_text(rng, 50, a.size());
        const WeightFn w = detail::random_weights(rng, a, 100);
        const std::uint64_t via_dp = wlcs_dp(x, y, w);
        const std::uint64_t via_rle = wlcs_rle(rle_encode(x), y, w);
        const std::uint64_t via_auto = wlcs_auto(x, y, w);
        if (via_dp != via_rle || via_dp != via_auto) ++disagreements;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " instances, " << disagreements << " disagreements ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {7, "weighted engines agree", disagreements == 0, os.str()};
}

/// The production DP matches exhaustive enumeration on tiny instances, and
/// every engine scores the adversarial run-boundary instance identically.
inline CriterionResult exhaustive_oracle_agreement() {
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(0x0AC1Eull);
    std::uniform_int_distribution<unsigned> sigma_dist(2, 4);
    std::uint64_t checked = 0, disagreements = 0;
    for (int rep = 0; rep < 1'000; ++rep) {
        const Alphabet a(sigma_dist(rng));
        const Text x = detail::random_text(rng, 10, a.size());
        const Text y = detail::random_text(rng, 10, a.size());
        const WeightFn w = detail::random_weights(rng, a, 100);
        if (wlcs_dp(x, y, w) != oracle::wlcs_exhaustive(x, y, w)) ++disagreements;
        ++checked;
    }

    const Alphabet a3(3);
    const Text cx = parse_text("2012", a3);
    const Text cy = parse_text("0122", a3);
    const WeightFn cw(a3, {1, 1, 5});
    const bool counterexample_ok = wlcs_dp(cx, cy, cw) == 10 &&
                                   wlcs_rle(rle_encode(cx), cy, cw) == 10 &&
                                   wlcs_auto(cx, cy, cw) == 10 &&
                                   oracle::wlcs_exhaustive(cx, cy, cw) == 10;

    std::ostringstream os;
    os << checked << " instances, " << disagreements << " disagreements, boundary instance "
       << (counterexample_ok ? "ok" : "wrong") << " ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {8, "exhaustive oracle agreement", disagreements == 0 && counterexample_ok, os.str()};
}

/// With unit weights the weighted solver reduces to plain LCS length.
inline CriterionResult unit_weight_reduction() {
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(0x111111ull);
    std::uniform_int_distribution<unsigned> sigma_dist(2, 4);
    std::uint64_t checked = 0, disagreements = 0;
    for (int rep = 0; rep < 1'000; ++rep) {
        const Alphabet a(sigma_dist(rng));
        const Text x = detail::random_text(rng, 200, a.size());
        const Text y = detail::random_text(rng, 50, a.size());
        if (wlcs_dp(x, y, WeightFn::ones(a)) != lcs_length(x, y)) ++disagreements;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " instances, " << disagreements << " disagreements ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {9, "unit weights reduce to LCS length", disagreements == 0, os.str()};
}

/// The window deque performs exactly runs * |y| insertions and at most that
/// many removals per solve.
inline CriterionResult deque_operation_accounting() {
    const auto t0 = detail::Clock::now();
    std::mt19937_64 rng(0xDEC0DEull);
    std::uniform_int_distribution<unsigned> sigma_dist(2, 4);
    std::uint64_t checked = 0, violations = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const Alphabet a(sigma_dist(rng));
        const Text x = detail::random_text(rng, 200, a.size());
        const Text y = detail::random_text(rng, 50, a.size());
        const WeightFn w = detail::random_weights(rng, a, 100);
        const RleString rle = rle_encode(x);
        DequeCounters counters;
        wlcs_rle(rle, y, w, &counters);
        const std::uint64_t budget = std::uint64_t(rle.size()) * y.size();
        if (counters.insertions != budget || counters.removals > budget) ++violations;
        ++checked;
    }
    std::ostringstream os;
    os << checked << " solves, " << violations << " violations ("
       << detail::fmt_seconds(detail::seconds_since(t0)) << ")";
    return {10, "window deque operation accounting", violations == 0, os.str()};
}

/// Streams ten million random symbols through a sketcher; the state must
/// stay under a fixed memory ceiling (nothing of the stream is buffered)
/// and should finish within ten seconds (soft target).
inline CriterionResult streaming_contract() {
    const auto t0 = detail::Clock::now();
    constexpr std::uint64_t stream_len = 10'000'000;
    constexpr std::size_t ceiling_bytes = 256 * 1024;

    const Alphabet a(4);
    Sketcher sketcher(a, 8);
    std::mt19937_64 rng(0x57AE0Aull);
    std::size_t peak = sketcher.state_bytes();
    for (std::uint64_t i = 0; i < stream_len; ++i) {
        sketcher.push(Symbol(rng() & 3));
        if ((i & 0xFFF) == 0 && sketcher.state_bytes() > peak) peak = sketcher.state_bytes();
    }
    peak = std::max(peak, sketcher.state_bytes());
    const double elapsed = detail::seconds_since(t0);

    const bool memory_ok = peak <= ceiling_bytes;
    std::ostringstream os;
    os << stream_len << " symbols, peak state " << peak << " bytes (ceiling " << ceiling_bytes
       << "), " << detail::fmt_seconds(elapsed);
    if (elapsed >= 10.0) os << " [exceeds 10s soft target]";
    return {11, "streaming sketch memory and throughput", memory_ok, os.str()};
}

inline std::vector<CriterionResult> run_all() {
    return {
        sketch_preservation_exhaustive(),
        sketch_run_and_length_bounds(),
        sketch_idempotence(),
        decision_protocol_soundness(),
        hard_string_incompressibility(),
        indexed_pattern_probes(),
        weighted_engine_agreement(),
        exhaustive_oracle_agreement(),
        unit_weight_reduction(),
        deque_operation_accounting(),
        streaming_contract(),
    };
}

/// Runs every criterion, printing one pass/fail line each; returns true
/// when all passed.
inline bool run_and_report(std::ostream& out) {
    bool all_passed = true;
    using Check = CriterionResult (*)();
    constexpr Check checks[] = {
        &sketch_preservation_exhaustive,
        &sketch_run_and_length_bounds,
        &sketch_idempotence,
        &decision_protocol_soundness,
        &hard_string_incompressibility,
        &indexed_pattern_probes,
        &weighted_engine_agreement,
        &exhaustive_oracle_agreement,
        &unit_weight_reduction,
        &deque_operation_accounting,
        &streaming_contract,
    };
    for (Check check : checks) {
        const CriterionResult r = check();
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail
            << "\n";
        out.flush();
        all_passed = all_passed && r.passed;
    }
    return all_passed;
}

} // namespace lcsk::verify
