// Shared helpers for the unit tests.

#pragma once

#include <random>
#include <string_view>

#include <lcsk/core.hpp>

namespace testutil {

inline lcsk::Text T(std::string_view digits, unsigned sigma = 10) {
    return lcsk::parse_text(digits, lcsk::Alphabet(sigma));
}

inline lcsk::Text random_text(std::mt19937_64& rng, std::size_t max_len, unsigned sigma) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<unsigned> sym_dist(0, sigma - 1);
    lcsk::Text x(len_dist(rng));
    for (lcsk::Symbol& c : x) c = lcsk::Symbol(sym_dist(rng));
    return x;
}

inline lcsk::WeightFn random_weights(std::mt19937_64& rng, lcsk::Alphabet a,
                                     std::uint64_t max_w) {
    std::uniform_int_distribution<std::uint64_t> dist(1, max_w);
    std::vector<std::uint64_t> w(a.size());
    for (auto& v : w) v = dist(rng);
    return lcsk::WeightFn(a, std::move(w));
}

} // namespace testutil
