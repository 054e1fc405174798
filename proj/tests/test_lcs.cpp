#include <catch2/catch_amalgamated.hpp>

#include <lcsk/lcs.hpp>

#include "test_util.hpp"

using namespace lcsk;
using testutil::T;

TEST_CASE("is_subsequence basics") {
    CHECK(is_subsequence(T(""), T("0101")));
    CHECK(is_subsequence(T("11"), T("0101")));
    CHECK_FALSE(is_subsequence(T("110"), T("0101")));
    CHECK(is_subsequence(T(""), T("")));
    CHECK_FALSE(is_subsequence(T("0"), T("")));
}

TEST_CASE("lcs_length basics") {
    CHECK(lcs_length(T("0101"), T("")) == 0);
    CHECK(lcs_length(T(""), T("0101")) == 0);
    CHECK(lcs_length(T("0101"), T("1010")) == 3);
    const Text x = T("0120121");
    CHECK(lcs_length(x, x) == x.size());
}

TEST_CASE("lcs_length properties") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const unsigned sigma = 2 + rng() % 3;
        const Text x = testutil::random_text(rng, 40, sigma);
        const Text y = testutil::random_text(rng, 40, sigma);
        const std::size_t l = lcs_length(x, y);
        CHECK(l == lcs_length(y, x));
        CHECK(l <= std::min(x.size(), y.size()));
        CHECK(is_subsequence(y, x) == (l == y.size()));
    }
}

TEST_CASE("sketched decision examples") {
    const Alphabet a(2);
    CHECK(lcs_decide_sketched(T("0101"), T("1010"), a, 3).answer);
    CHECK_FALSE(lcs_decide_sketched(T("0101"), T("1010"), a, 4).answer);
    CHECK(lcs_decide_sketched(T("0011"), T("1100"), a, 0).answer);
    CHECK(lcs_decide_sketched(T(""), T(""), a, 0).answer);
}

TEST_CASE("decision report is internally consistent") {
    const Alphabet a(2);
    const Text x = T("001100110011");
    const Text y = T("010101");
    for (std::uint64_t limit = 0; limit <= 7; ++limit) {
        const DecisionReport rep = lcs_decide_sketched(x, y, a, limit);
        CHECK(rep.answer == (std::uint64_t(rep.lcs_of_sketches) >= limit));
        CHECK(rep.sketch_x_bits == sketch_bits(sketch_stream(x, a, limit), a, limit));
        CHECK(rep.sketch_y_bits == sketch_bits(sketch_stream(y, a, limit), a, limit));
    }
}

TEST_CASE("sketched decision agrees with the exact DP") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 500; ++rep) {
        const unsigned sigma = 2 + rng() % 2;
        const Alphabet a(sigma);
        const Text x = testutil::random_text(rng, 64, sigma);
        const Text y = testutil::random_text(rng, 64, sigma);
        const std::uint64_t limit = rng() % 7;
        CHECK(lcs_decide_sketched(x, y, a, limit).answer ==
              (std::uint64_t(lcs_length(x, y)) >= limit));
    }
}
