// Streaming subsequence sketch. Feeding a text through Sketcher keeps a
// subsequence of the input with exactly the same set of subsequences of
// length at most `limit`, while the kept string stays small: every run has
// length at most `limit` and the number of runs is at most
// 2*(limit+1)^(sigma-1) - 1, independent of the input length.

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"

namespace lcsk {

inline std::uint64_t sketch_run_bound(Alphabet a, std::uint64_t limit) {
    std::uint64_t b = sat_mul(2, sat_pow(sat_add(limit, 1), a.size() - 1));
    return b == 0 ? 0 : b - 1;
}

/// One-pass sketch builder with O(2^sigma) work per kept symbol.
///
/// For every nonempty subset S of the alphabet (indexed by bitmask), t_[S]
/// counts how many disjoint blocks, each containing every symbol of S, fit
/// into the maximal suffix of the kept string that uses only symbols of S.
/// q_[S] collects the symbols gathered toward the next such block and is
/// reset (incrementing t_[S]) as soon as it fills up, so q_[S] is always a
/// proper subset of S. A pushed symbol c is dropped exactly when some S
/// containing c already has t_[S] >= limit; in that case the kept string
/// already ends in enough complete S-blocks that appending c cannot add any
/// new subsequence of length <= limit. State is mutated only when a symbol
/// is kept, so replaying the kept string reproduces the same evolution.
class Sketcher {
public:
    Sketcher(Alphabet a, std::uint64_t limit)
        : sigma_(a.size()),
          limit_(limit),
          full_((1u << a.size()) - 1),
          run_bound_(sketch_run_bound(a, limit)),
          t_(std::size_t(1) << a.size(), 0),
          q_(std::size_t(1) << a.size(), 0) {}

    /// Feeds one symbol; returns true when it was kept.
    bool push(Symbol c) {
        if (c >= sigma_)
            throw error("symbol " + std::to_string(unsigned(c)) +
                        " out of range for alphabet of size " + std::to_string(sigma_));
        const std::uint32_t bit = 1u << c;
        const std::uint32_t rest = full_ & ~bit;

        // Drop test over all subsets containing c; the singleton {c} comes
        // first, which is the common trigger on long runs.
        for (std::uint32_t s = 0;; s = (s - rest) & rest) {
            if (t_[s | bit] >= limit_) return false;
            if (s == rest) break;
        }

        rle_append(kept_, c);
        ++kept_len_;
        assert(kept_.back().len <= std::max<std::uint64_t>(limit_, 1));
        assert(kept_.size() <= run_bound_);

        for (std::uint32_t s = 0;; s = (s - rest) & rest) {
            const std::uint32_t mask = s | bit;
            q_[mask] |= bit;
            if (q_[mask] == mask) {
                q_[mask] = 0;
                ++t_[mask];
            }
            if (s == rest) break;
        }
        for (std::uint32_t s = rest;; s = (s - 1) & rest) {
            t_[s] = 0;
            q_[s] = 0;
            if (s == 0) break;
        }
        return true;
    }

    /// The sketch built so far, in canonical run-length form.
    const RleString& kept() const { return kept_; }
    std::uint64_t kept_length() const { return kept_len_; }
    std::uint64_t limit() const { return limit_; }
    unsigned sigma() const { return sigma_; }

    RleString finish() const { return kept_; }

    /// Bytes held by the state; stays bounded by the run bound regardless
    /// of how many symbols were streamed through.
    std::size_t state_bytes() const {
        return sizeof(*this) + t_.capacity() * sizeof(t_[0]) + q_.capacity() * sizeof(q_[0]) +
               kept_.capacity() * sizeof(Run);
    }

private:
    unsigned sigma_;
    std::uint64_t limit_;
    std::uint32_t full_;
    std::uint64_t run_bound_;
    std::vector<std::uint64_t> t_;
    std::vector<std::uint32_t> q_;
    RleString kept_;
    std::uint64_t kept_len_ = 0;
};

inline RleString sketch_stream(const Text& x, Alphabet a, std::uint64_t limit) {
    Sketcher s(a, limit);
    for (Symbol c : x) s.push(c);
    return s.finish();
}

// --- serialization ---------------------------------------------------------

// Binary layout: magic "LCSK1", one byte sigma, varint limit, varint run
// count, then per run one symbol byte followed by a varint run length.
// Varints are unsigned LEB128.

inline constexpr char sketch_magic[5] = {'L', 'C', 'S', 'K', '1'};

inline unsigned varint_size(std::uint64_t v) {
    unsigned n = 1;
    while (v >>= 7) ++n;
    return n;
}

inline void write_varint(std::ostream& out, std::uint64_t v) {
    do {
        std::uint8_t byte = v & 0x7f;
        v >>= 7;
        if (v) byte |= 0x80;
        out.put(char(byte));
    } while (v);
}

inline std::uint64_t read_varint(std::istream& in) {
    std::uint64_t v = 0;
    unsigned shift = 0;
    for (;;) {
        int ch = in.get();
        if (ch == std::char_traits<char>::eof())
            throw parse_error("truncated varint in sketch stream");
        if (shift >= 64 || (shift == 63 && (ch & 0x7e)))
            throw parse_error("varint overflow in sketch stream");
        v |= std::uint64_t(ch & 0x7f) << shift;
        if (!(ch & 0x80)) return v;
        shift += 7;
    }
}

struct SketchRecord {
    std::uint8_t sigma;
    std::uint64_t limit;
    RleString runs;

    friend bool operator==(const SketchRecord&, const SketchRecord&) = default;
};

inline void write_sketch(std::ostream& out, const SketchRecord& s) {
    Alphabet a(s.sigma);
    if (!rle_is_canonical(s.runs)) throw error("refusing to serialize a non-canonical sketch");
    out.write(sketch_magic, sizeof sketch_magic);
    out.put(char(s.sigma));
    write_varint(out, s.limit);
    write_varint(out, s.runs.size());
    for (const Run& run : s.runs) {
        a.require(run.sym);
        out.put(char(run.sym));
        write_varint(out, run.len);
    }
}

inline SketchRecord read_sketch(std::istream& in) {
    char magic[sizeof sketch_magic];
    in.read(magic, sizeof magic);
    if (in.gcount() != std::streamsize(sizeof magic) ||
        !std::equal(magic, magic + sizeof magic, sketch_magic))
        throw parse_error("bad sketch magic, expected \"LCSK1\"");

    int sigma_ch = in.get();
    if (sigma_ch == std::char_traits<char>::eof())
        throw parse_error("truncated sketch header");
    if (sigma_ch < int(Alphabet::min_sigma) || sigma_ch > int(Alphabet::max_sigma))
        throw parse_error("sketch alphabet size " + std::to_string(sigma_ch) + " out of range");

    SketchRecord rec;
    rec.sigma = std::uint8_t(sigma_ch);
    rec.limit = read_varint(in);
    const std::uint64_t run_count = read_varint(in);
    rec.runs.reserve(run_count);
    for (std::uint64_t i = 0; i < run_count; ++i) {
        int sym = in.get();
        if (sym == std::char_traits<char>::eof()) throw parse_error("truncated sketch run list");
        if (sym >= sigma_ch)
            throw parse_error("sketch run symbol " + std::to_string(sym) + " out of range");
        std::uint64_t len = read_varint(in);
        if (len == 0) throw parse_error("zero-length run in sketch stream");
        if (!rec.runs.empty() && rec.runs.back().sym == Symbol(sym))
            throw parse_error("non-canonical sketch: adjacent runs share a symbol");
        rec.runs.push_back(Run{Symbol(sym), len});
    }
    return rec;
}

/// Returns ceil(log2(v)) for v >= 1.
inline unsigned ceil_log2(std::uint64_t v) {
    return v <= 1 ? 0 : unsigned(std::bit_width(v - 1));
}

/// Size of the sketch in bits: the serialized header plus, per run, enough
/// bits for one symbol and one run length in [1, limit].
inline std::uint64_t sketch_bits(const RleString& r, Alphabet a, std::uint64_t limit) {
    if (!rle_is_canonical(r)) throw error("sketch is not in canonical run-length form");
    for (const Run& run : r) {
        a.require(run.sym);
        if (run.len > limit)
            throw error("malformed sketch: run of length " + std::to_string(run.len) +
                        " exceeds limit " + std::to_string(limit));
    }
    const std::uint64_t header_bits =
        8 * (sizeof sketch_magic + 1 + varint_size(limit) + varint_size(r.size()));
    const std::uint64_t per_run = ceil_log2(a.size()) + ceil_log2(limit + 1);
    return header_bits + sat_mul(r.size(), per_run);
}

} // namespace lcsk
