#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <lcsk/oracle.hpp>
#include <lcsk/sketch.hpp>

#include "test_util.hpp"

using namespace lcsk;
using testutil::T;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

std::vector<bool> push_all(Sketcher& s, const Text& x) {
    std::vector<bool> kept;
    kept.reserve(x.size());
    for (Symbol c : x) kept.push_back(s.push(c));
    return kept;
}

// Independent check of the drop rule: some subset S containing c must have
// a suffix of the kept string that splits into `limit` blocks, each block
// containing every symbol of S. Greedy right-to-left block collection is
// optimal for that, so it decides the question exactly.
bool has_perm_suffix(const Text& kept, Symbol c, std::uint64_t limit, unsigned sigma) {
    const std::uint32_t full = (1u << sigma) - 1;
    const std::uint32_t cbit = 1u << c;
    for (std::uint32_t set = cbit; set <= full; ++set) {
        if (!(set & cbit)) continue;
        std::uint64_t blocks = 0;
        std::uint32_t seen = 0;
        for (std::size_t k = kept.size(); k-- > 0 && blocks < limit;) {
            const std::uint32_t bit = 1u << kept[k];
            if (!(set & bit)) break;
            seen |= bit;
            if (seen == set) {
                ++blocks;
                seen = 0;
            }
        }
        if (blocks >= limit) return true;
    }
    return false;
}

} // namespace

TEST_CASE("fresh sketcher state") {
    const Alphabet a(2);
    Sketcher s(a, 3);
    CHECK(s.kept().empty());
    CHECK(s.kept_length() == 0);
    CHECK(s.finish() == RleString{});
    CHECK_THROWS_AS(Alphabet(1), error);
}

TEST_CASE("limit zero drops every symbol") {
    Sketcher s(Alphabet(2), 0);
    for (Symbol c : T("010101")) CHECK_FALSE(s.push(c));
    CHECK(s.finish().empty());
}

TEST_CASE("push rejects out-of-range symbols") {
    Sketcher s(Alphabet(2), 3);
    CHECK_THROWS_MATCHES(s.push(2), error, MessageMatches(ContainsSubstring("out of range")));
}

TEST_CASE("push hand traces") {
    SECTION("run capping: 000 at limit 2") {
        Sketcher s(Alphabet(2), 2);
        CHECK(push_all(s, T("000")) == std::vector<bool>{true, true, false});
        CHECK(rle_decode(s.kept()) == T("00"));
    }
    SECTION("alternation at limit 1") {
        Sketcher s(Alphabet(2), 1);
        CHECK(push_all(s, T("0101")) == std::vector<bool>{true, true, false, false});
        CHECK(rle_decode(s.kept()) == T("01"));
        // Cross-check with the subsequence-set oracle up to the limit.
        CHECK(oracle::subseq_set_equal(T("0101"), rle_decode(s.kept()), 1, Alphabet(2)));
    }
    SECTION("001100 at limit 2") {
        Sketcher s(Alphabet(2), 2);
        CHECK(push_all(s, T("001100")) ==
              std::vector<bool>{true, true, true, true, true, false});
        CHECK(rle_decode(s.kept()) == T("00110"));
        CHECK(oracle::subseq_set_equal(T("001100"), rle_decode(s.kept()), 2, Alphabet(2)));
    }
}

TEST_CASE("finish examples") {
    SECTION("canonical runs from the 001100 trace") {
        Sketcher s(Alphabet(2), 2);
        push_all(s, T("001100"));
        CHECK(s.finish() == RleString{{0, 2}, {1, 2}, {0, 1}});
    }
    SECTION("long run is capped at the limit") {
        Sketcher s(Alphabet(2), 3);
        push_all(s, T("0000000000"));
        CHECK(s.finish() == RleString{{0, 3}});
    }
}

TEST_CASE("sketch_stream examples") {
    const Alphabet a(2);
    CHECK(sketch_stream(T(""), a, 4).empty());
    CHECK(sketch_stream(T("0101"), a, 1) == RleString{{0, 1}, {1, 1}});
    const RleString sk = sketch_stream(T("00100100"), a, 4);
    CHECK(oracle::subseq_set_equal(T("00100100"), rle_decode(sk), 4, a));
}

TEST_CASE("sketch invariants on random texts") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 300; ++rep) {
        const unsigned sigma = 2 + rng() % 2;
        const Alphabet a(sigma);
        const std::uint64_t limit = rng() % 5;
        const Text x = testutil::random_text(rng, 60, sigma);
        const RleString sk = sketch_stream(x, a, limit);

        CHECK(rle_is_canonical(sk));
        CHECK(sk.size() <= sketch_run_bound(a, limit));
        for (const Run& run : sk) CHECK(run.len <= limit);
        CHECK(rle_length(sk) <= sat_mul(limit, sk.size()));

        // Idempotence: sketching the kept string reproduces it.
        CHECK(sketch_stream(rle_decode(sk), a, limit) == sk);
    }
}

TEST_CASE("prefix monotonicity") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const Alphabet a(2);
        const std::uint64_t limit = rng() % 4;
        const Text x = testutil::random_text(rng, 40, 2);
        const Text full = rle_decode(sketch_stream(x, a, limit));
        for (std::size_t i = 0; i <= x.size(); ++i) {
            const Text pre =
                rle_decode(sketch_stream(Text(x.begin(), x.begin() + i), a, limit));
            REQUIRE(pre.size() <= full.size());
            CHECK(std::equal(pre.begin(), pre.end(), full.begin()));
        }
    }
}

TEST_CASE("drops are justified by a permutation suffix") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 200; ++rep) {
        const unsigned sigma = 2 + rng() % 2;
        const std::uint64_t limit = rng() % 4;
        const Text x = testutil::random_text(rng, 50, sigma);
        Sketcher s(Alphabet(sigma), limit);
        for (Symbol c : x) {
            if (!s.push(c)) CHECK(has_perm_suffix(rle_decode(s.kept()), c, limit, sigma));
        }
    }
}

TEST_CASE("sketch bit accounting") {
    const Alphabet a(2);
    // Header: 5 magic bytes, 1 sigma byte, one varint each for limit and
    // run count; payload: per run, bits for one symbol and one length.
    CHECK(sketch_bits(RleString{}, a, 2) == 64);
    CHECK(sketch_bits(RleString{{0, 3}}, a, 3) == 64 + 3);
    CHECK(sketch_bits(RleString{{0, 2}, {1, 2}, {0, 1}}, a, 2) == 64 + 9);
    CHECK(sketch_bits(RleString{}, Alphabet(10), 0) == 64);

    CHECK_THROWS_MATCHES(sketch_bits(RleString{{0, 4}}, a, 3), error,
                         MessageMatches(ContainsSubstring("malformed sketch")));
    CHECK_THROWS_MATCHES(sketch_bits(RleString{{0, 1}, {0, 1}}, a, 3), error,
                         MessageMatches(ContainsSubstring("canonical")));
}

TEST_CASE("varint coding") {
    for (std::uint64_t v : {0ull, 1ull, 127ull, 128ull, 300ull, 16383ull, 16384ull,
                            ~0ull >> 1, ~0ull}) {
        std::ostringstream out;
        write_varint(out, v);
        CHECK(out.str().size() == varint_size(v));
        std::istringstream in(out.str());
        CHECK(read_varint(in) == v);
    }
    std::istringstream truncated(std::string("\x80", 1));
    CHECK_THROWS_MATCHES(read_varint(truncated), parse_error, MessageMatches(ContainsSubstring("truncated")));
}

TEST_CASE("binary sketch format") {
    const SketchRecord rec{2, 2, RleString{{0, 2}, {1, 2}, {0, 1}}};

    std::ostringstream out;
    write_sketch(out, rec);
    const std::string expected{'L', 'C', 'S', 'K', '1', 2, 2, 3, 0, 2, 1, 2, 0, 1};
    CHECK(out.str() == expected);

    std::istringstream in(out.str());
    CHECK(read_sketch(in) == rec);

    SECTION("round trip with multi-byte varints") {
        const SketchRecord big{3, 300, RleString{{0, 200}, {2, 1}, {0, 300}}};
        std::ostringstream o;
        write_sketch(o, big);
        std::istringstream i(o.str());
        CHECK(read_sketch(i) == big);
    }
    SECTION("reader rejects malformed streams") {
        auto read_from = [](std::string bytes) {
            std::istringstream i(std::move(bytes));
            return read_sketch(i);
        };
        CHECK_THROWS_MATCHES(read_from("LCSK2\x02\x02\x00"), parse_error,
                             MessageMatches(ContainsSubstring("magic")));
        CHECK_THROWS_MATCHES(read_from("LCS"), parse_error, MessageMatches(ContainsSubstring("magic")));
        CHECK_THROWS_MATCHES(read_from(std::string{'L', 'C', 'S', 'K', '1', 1, 2, 0}),
                             parse_error, MessageMatches(ContainsSubstring("out of range")));
        CHECK_THROWS_MATCHES(read_from(std::string{'L', 'C', 'S', 'K', '1', 2, 2, 1}),
                             parse_error, MessageMatches(ContainsSubstring("truncated")));
        CHECK_THROWS_MATCHES(read_from(std::string{'L', 'C', 'S', 'K', '1', 2, 2, 1, 0, 0}),
                             parse_error, MessageMatches(ContainsSubstring("zero-length")));
        CHECK_THROWS_MATCHES(
            read_from(std::string{'L', 'C', 'S', 'K', '1', 2, 2, 2, 0, 1, 0, 1}), parse_error,
            MessageMatches(ContainsSubstring("non-canonical")));
        CHECK_THROWS_MATCHES(
            read_from(std::string{'L', 'C', 'S', 'K', '1', 2, 2, 1, 5, 1}), parse_error,
            MessageMatches(ContainsSubstring("out of range")));
    }
    SECTION("writer refuses non-canonical runs") {
        std::ostringstream o;
        CHECK_THROWS_MATCHES(write_sketch(o, SketchRecord{2, 2, RleString{{0, 1}, {0, 1}}}),
                             error, MessageMatches(ContainsSubstring("non-canonical")));
    }
}

TEST_CASE("state stays small under long streams") {
    const Alphabet a(3);
    Sketcher s(a, 4);
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100'000; ++i) s.push(Symbol(rng() % 3));
    CHECK(s.state_bytes() < 64 * 1024);
    CHECK(s.kept().size() <= sketch_run_bound(a, 4));
}
