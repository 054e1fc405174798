// Core types shared by every lcsk component: alphabets of at most ten
// symbols, digit texts, run-length encoded strings, and per-symbol weight
// tables, together with their text parsers and serializers.

#pragma once

#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcsk {

using Symbol = std::uint8_t;
using Text = std::vector<Symbol>;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// Saturating arithmetic for cost estimates and enumeration guards.
constexpr std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > std::numeric_limits<std::uint64_t>::max() / b
               ? std::numeric_limits<std::uint64_t>::max()
               : a * b;
}

constexpr std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r = sat_mul(r, base);
    return r;
}

/// Alphabet {0, ..., sigma-1}. Symbols are rendered as the ASCII digits
/// '0'..'9', so sigma is capped at 10; the cap also keeps the sketcher's
/// per-subset tables at no more than 1024 entries.
class Alphabet {
public:
    static constexpr unsigned min_sigma = 2;
    static constexpr unsigned max_sigma = 10;

    explicit Alphabet(unsigned sigma) : sigma_(sigma) {
        if (sigma < min_sigma || sigma > max_sigma)
            throw error("alphabet size must be between " + std::to_string(min_sigma) + " and " +
                        std::to_string(max_sigma) + ", got " + std::to_string(sigma));
    }

    unsigned size() const { return sigma_; }
    bool contains(Symbol c) const { return c < sigma_; }

    void require(Symbol c) const {
        if (!contains(c))
            throw error("symbol " + std::to_string(unsigned(c)) +
                        " out of range for alphabet of size " + std::to_string(sigma_));
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    unsigned sigma_;
};

struct Run {
    Symbol sym;
    std::uint64_t len;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoded string. Canonical form: no zero-length runs and
/// adjacent runs carry distinct symbols. Every producer in this library
/// emits canonical RleStrings; consumers that require canonical input
/// validate it.
using RleString = std::vector<Run>;

/// Appends `count` copies of `c`, merging into the last run when the
/// symbols match. Appending zero copies is a no-op.
inline void rle_append(RleString& r, Symbol c, std::uint64_t count = 1) {
    if (count == 0) return;
    if (!r.empty() && r.back().sym == c)
        r.back().len += count;
    else
        r.push_back(Run{c, count});
}

inline bool rle_is_canonical(const RleString& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].len == 0) return false;
        if (i > 0 && r[i - 1].sym == r[i].sym) return false;
    }
    return true;
}

/// Number of symbols the encoding expands to.
inline std::uint64_t rle_length(const RleString& r) {
    std::uint64_t n = 0;
    for (const Run& run : r) n += run.len;
    return n;
}

inline RleString rle_encode(const Text& x) {
    RleString r;
    for (Symbol c : x) rle_append(r, c);
    return r;
}

inline Text rle_decode(const RleString& r) {
    Text x;
    x.reserve(rle_length(r));
    for (const Run& run : r) x.insert(x.end(), run.len, run.sym);
    return x;
}

inline std::size_t count_runs(const Text& x) {
    std::size_t runs = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i == 0 || x[i] != x[i - 1]) ++runs;
    return runs;
}

namespace detail {

inline bool is_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
}

inline Symbol digit_symbol(char ch, Alphabet a) {
    if (ch < '0' || ch > '9')
        throw parse_error(std::string("invalid character '") + ch + "' in text input");
    Symbol c = Symbol(ch - '0');
    if (!a.contains(c))
        throw parse_error("digit " + std::to_string(unsigned(c)) +
                          " out of range for alphabet of size " + std::to_string(a.size()));
    return c;
}

} // namespace detail

/// Streams every symbol of a digit text to `emit` without buffering the
/// input. Whitespace is skipped; anything else that is not a digit below
/// sigma is a parse error.
template <class F>
void for_each_symbol(std::istream& in, Alphabet a, F&& emit) {
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof buf);
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            if (detail::is_space(buf[i])) continue;
            emit(detail::digit_symbol(buf[i], a));
        }
    }
}

inline Text parse_text(std::string_view s, Alphabet a) {
    Text x;
    for (char ch : s) {
        if (detail::is_space(ch)) continue;
        x.push_back(detail::digit_symbol(ch, a));
    }
    return x;
}

inline std::string text_to_digits(const Text& x) {
    std::string s;
    s.reserve(x.size());
    for (Symbol c : x) s.push_back(char('0' + c));
    return s;
}

/// Serializes to whitespace-separated "symbol*length" tokens, e.g. "0*3 1*2".
inline std::string rle_to_text(const RleString& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) s.push_back(' ');
        s.push_back(char('0' + r[i].sym));
        s.push_back('*');
        s += std::to_string(r[i].len);
    }
    return s;
}

/// Parses the "symbol*length" token format. The result must be canonical:
/// zero lengths and adjacent equal symbols are rejected.
inline RleString parse_rle(std::string_view s, Alphabet a) {
    RleString r;
    std::size_t i = 0;
    while (i < s.size()) {
        if (detail::is_space(s[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < s.size() && !detail::is_space(s[end])) ++end;
        std::string_view tok = s.substr(i, end - i);
        i = end;

        if (tok.size() < 3 || tok[1] != '*')
            throw parse_error("malformed run token \"" + std::string(tok) +
                              "\", expected symbol*length");
        Symbol c = detail::digit_symbol(tok[0], a);
        std::uint64_t len = 0;
        for (std::size_t k = 2; k < tok.size(); ++k) {
            if (tok[k] < '0' || tok[k] > '9')
                throw parse_error("malformed run length in token \"" + std::string(tok) + "\"");
            std::uint64_t next = sat_add(sat_mul(len, 10), std::uint64_t(tok[k] - '0'));
            if (next == std::numeric_limits<std::uint64_t>::max())
                throw parse_error("run length overflow in token \"" + std::string(tok) + "\"");
            len = next;
        }
        if (len == 0)
            throw parse_error("zero-length run in token \"" + std::string(tok) + "\"");
        if (!r.empty() && r.back().sym == c)
            throw parse_error("non-canonical run list: adjacent runs share symbol " +
                              std::to_string(unsigned(c)));
        r.push_back(Run{c, len});
    }
    return r;
}

/// Positive integer weight per alphabet symbol. Weights are bounded below
/// 2^32 so that scores accumulated in 64-bit arithmetic stay exact under
/// the solver-side overflow check.
class WeightFn {
public:
    static constexpr std::uint64_t max_weight_bound = std::uint64_t(1) << 32;

    WeightFn(Alphabet a, std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
        if (weights_.size() != a.size())
            throw error("expected " + std::to_string(a.size()) + " weights, got " +
                        std::to_string(weights_.size()));
        for (std::size_t c = 0; c < weights_.size(); ++c) {
            if (weights_[c] == 0)
                throw error("weight for symbol " + std::to_string(c) + " must be positive");
            if (weights_[c] >= max_weight_bound)
                throw error("weight for symbol " + std::to_string(c) + " must be below 2^32");
        }
    }

    static WeightFn ones(Alphabet a) {
        return WeightFn(a, std::vector<std::uint64_t>(a.size(), 1));
    }

    std::uint64_t operator[](Symbol c) const { return weights_[c]; }
    unsigned sigma() const { return unsigned(weights_.size()); }

    std::uint64_t max_weight() const {
        std::uint64_t m = 0;
        for (std::uint64_t w : weights_) m = m < w ? w : m;
        return m;
    }

private:
    std::vector<std::uint64_t> weights_;
};

/// Parses "symbol weight" lines; every symbol of the alphabet must be
/// assigned exactly once. Missing symbol, duplicate symbol, zero weight,
/// weight at or above 2^32, and malformed lines are distinct errors.
inline WeightFn parse_weights(std::string_view s, Alphabet a) {
    std::vector<std::uint64_t> w(a.size(), 0);
    std::vector<bool> seen(a.size(), false);

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < s.size()) {
        std::size_t eol = s.find('\n', pos);
        if (eol == std::string_view::npos) eol = s.size();
        std::string_view line = s.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        std::size_t b = 0, e = line.size();
        while (b < e && detail::is_space(line[b])) ++b;
        while (e > b && detail::is_space(line[e - 1])) --e;
        line = line.substr(b, e - b);
        if (line.empty()) continue;

        const std::string where = "weights line " + std::to_string(line_no);
        if (line.size() < 3 || line[0] < '0' || line[0] > '9' || !detail::is_space(line[1]))
            throw parse_error(where + " is malformed, expected \"symbol weight\"");
        Symbol c = Symbol(line[0] - '0');
        if (!a.contains(c))
            throw parse_error(where + ": symbol " + std::to_string(unsigned(c)) +
                              " out of range for alphabet of size " + std::to_string(a.size()));
        if (seen[c])
            throw parse_error(where + ": duplicate symbol " + std::to_string(unsigned(c)));

        std::uint64_t weight = 0;
        std::size_t k = 2;
        while (k < line.size() && detail::is_space(line[k])) ++k;
        if (k == line.size())
            throw parse_error(where + " is malformed, expected \"symbol weight\"");
        for (; k < line.size(); ++k) {
            if (line[k] < '0' || line[k] > '9')
                throw parse_error(where + " is malformed, weight is not a decimal integer");
            weight = sat_add(sat_mul(weight, 10), std::uint64_t(line[k] - '0'));
            if (weight >= WeightFn::max_weight_bound)
                throw parse_error(where + ": weight must be below 2^32");
        }
        if (weight == 0)
            throw parse_error(where + ": weight must be positive");

        seen[c] = true;
        w[c] = weight;
    }

    for (std::size_t c = 0; c < w.size(); ++c)
        if (!seen[c])
            throw parse_error("weights input is missing symbol " + std::to_string(c));
    return WeightFn(a, std::move(w));
}

inline WeightFn parse_weights(std::istream& in, Alphabet a) {
    std::string all(std::istreambuf_iterator<char>(in), {});
    return parse_weights(std::string_view(all), a);
}

} // namespace lcsk
