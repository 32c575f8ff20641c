#pragma once
// gh_codec.hpp - Gopala-Hemachandra codes: existence decision, encoding, decoding
//
// Every representation is split as n = n0 + n1 where n1 is taken greedily from
// the remaining segment GH[6..] and n0 < GH[6] comes from the initial segment
// GH[1..5]. Which values n0 can take is fixed by a small per-parameter table.

#include "bitcode.hpp"
#include "integer.hpp"
#include "sequence.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghcode {

/// Representations of the remainders 0 <= r < GH[6] over indices 1..5.
class RemainderTable {
public:
    struct Entry {
        Integer remainder;
        std::array<std::uint8_t, 5> bits;
    };

    explicit RemainderTable(const GHSequence& seq) : a_(seq.a()), modulus_(seq.term(6)) {
        switch (a_) {
            case -2:
                add_rows({{0, "00000"}, {1, "00100"}, {2, "10010"}, {3, "10001"}, {4, "00010"},
                          {5, "00001"}, {6, "00101"}, {7, "01010"}, {8, "01001"}});
                break;
            case -3:
                add_rows({{0, "00000"}, {1, "00100"}, {2, "10010"}, {3, "10001"}, {4, "10101"},
                          {5, "00010"}, {6, "00001"}, {7, "00101"}, {8, "10011"}, {9, "01010"},
                          {10, "01001"}});
                break;
            case -4:
                add_rows({{0, "00000"}, {1, "00100"}, {2, "10010"}, {3, "10001"}, {4, "10101"},
                          {5, "01000"}, {6, "00010"}, {7, "00001"}, {8, "00101"}, {9, "10011"},
                          {10, "10111"}, {11, "01010"}, {12, "01001"}});
                break;
            default: {
                const Integer k = *seq.gap_parameter();
                add_rows({{0, "00000"}, {1, "00100"}, {2, "10010"}, {3, "10001"}, {4, "10101"},
                          {k + 5, "01000"}, {k + 6, "00010"}, {k + 7, "00001"}, {k + 8, "00101"},
                          {k + 9, "10011"}, {k + 10, "10111"}, {2 * k + 11, "01010"},
                          {2 * k + 12, "01001"}});
                break;
            }
        }
    }

    std::int64_t a() const noexcept { return a_; }

    /// GH[6]; valid remainders are 0 <= r < modulus().
    Integer modulus() const noexcept { return modulus_; }

    std::span<const Entry> entries() const noexcept { return entries_; }

    std::optional<Bitstring> lookup(Integer r) const {
        if (r < 0 || r >= modulus_) {
            throw std::invalid_argument("remainder " + to_string(r) + " outside [0, " + to_string(modulus_) + ")");
        }
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                                         [](const Entry& e, Integer v) { return e.remainder < v; });
        if (it == entries_.end() || it->remainder != r) return std::nullopt;
        return Bitstring({it->bits.begin(), it->bits.end()});
    }

    /// Maximal inclusive intervals of [0, GH[6]) with no representation.
    std::vector<std::pair<Integer, Integer>> gap_intervals() const {
        std::vector<std::pair<Integer, Integer>> gaps;
        Integer next = 0;
        for (const auto& e : entries_) {
            if (e.remainder > next) gaps.emplace_back(next, e.remainder - 1);
            next = e.remainder + 1;
        }
        if (next < modulus_) gaps.emplace_back(next, modulus_ - 1);
        return gaps;
    }

private:
    struct Row {
        Integer remainder;
        std::string_view bits;
    };

    void add_rows(std::initializer_list<Row> rows) {
        for (const auto& row : rows) {
            Entry e{row.remainder, {}};
            for (std::size_t i = 0; i < 5; ++i) e.bits[i] = row.bits[i] == '1';
            entries_.push_back(e);
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& x, const Entry& y) { return x.remainder < y.remainder; });
    }

    std::int64_t a_;
    Integer modulus_;
    std::vector<Entry> entries_;
};

/// Greedy cover of a value by the remaining segment.
struct GreedySplit {
    std::vector<std::size_t> picked;  // strictly decreasing, all >= 6
    Integer n1 = 0;                   // sum of the picked terms
    Integer n0 = 0;                   // residual, 0 <= n0 < GH[6]
};

struct EncodeOutcome {
    std::optional<Codeword> code;
    Integer n0 = 0;
    Integer n1 = 0;
    std::vector<std::size_t> picked;
    bool used_fallback = false;

    explicit operator bool() const noexcept { return code.has_value(); }
};

class GHCodec {
public:
    explicit GHCodec(std::int64_t a) : seq_(a), table_(seq_) {}

    const GHSequence& sequence() const noexcept { return seq_; }
    const RemainderTable& table() const noexcept { return table_; }
    std::int64_t a() const noexcept { return seq_.a(); }

    std::optional<Bitstring> remainder_lookup(Integer r) const { return table_.lookup(r); }

    /// Repeatedly takes the largest GH[m] (m >= 6) not exceeding what is left,
    /// until the residual drops below GH[6]. Accepts n >= 0.
    GreedySplit greedy_remaining(Integer n) const {
        if (n < 0) throw std::invalid_argument("greedy split needs n >= 0, got " + to_string(n));
        GreedySplit split;
        Integer rest = n;
        while (auto m = seq_.largest_remaining_leq(rest)) {
            split.picked.push_back(*m);
            rest -= seq_.term(*m);
        }
        split.n1 = n - rest;
        split.n0 = rest;
        return split;
    }

    /// Tries every representable remainder in ascending order and accepts the
    /// first whose complement the greedy pass reduces exactly to zero.
    EncodeOutcome encode_simple(Integer n) const {
        require_positive(n);
        for (const auto& entry : table_.entries()) {
            if (entry.remainder > n) break;
            auto split = greedy_remaining(n - entry.remainder);
            if (split.n0 != 0) continue;
            EncodeOutcome out;
            out.n0 = entry.remainder;
            out.n1 = split.n1;
            out.code = assemble(entry.bits, split.picked);
            out.picked = std::move(split.picked);
            return out;
        }
        return {};
    }

    /// One greedy pass; when the residual falls into a gap of the remainder
    /// table, a second attempt with n0 = GH[2] + GH[4] ("01010").
    EncodeOutcome encode_fast(Integer n) const {
        require_positive(n);
        auto split = greedy_remaining(n);
        EncodeOutcome out;
        out.n0 = split.n0;
        out.n1 = split.n1;
        if (auto rep = table_.lookup(split.n0)) {
            out.code = assemble(rep->bits(), split.picked);
            out.picked = std::move(split.picked);
            return out;
        }
        // Tables for a in {-2, -3, -4} are total, so only a <= -5 gets here.
        out.used_fallback = true;
        out.n0 = seq_.term(2) + seq_.term(4);
        out.n1 = n - out.n0;
        if (out.n1 < 0) return out;
        auto retry = greedy_remaining(out.n1);
        if (retry.n0 != 0) return out;
        static constexpr std::array<std::uint8_t, 5> prefix{0, 1, 0, 1, 0};
        out.code = assemble(prefix, retry.picked);
        out.picked = std::move(retry.picked);
        return out;
    }

    bool exists(Integer n) const { return encode_fast(n).code.has_value(); }

    /// Canonical code (the encode_fast output), or nullopt if none exists.
    std::optional<Codeword> encode(Integer n) const { return encode_fast(n).code; }

    /// Throws CodeError: NonPositiveValue when the value is <= 0, ValueOverflow
    /// past the sequence horizon.
    Integer decode(const Codeword& c) const {
        const auto alpha = c.bits().first(c.size() - 1);
        if (alpha.size() > seq_.horizon()) throw CodeError(CodeErrorKind::ValueOverflow, seq_.horizon());
        Integer v;
        try {
            v = value(seq_, alpha);
        } catch (const std::overflow_error&) {
            throw CodeError(CodeErrorKind::ValueOverflow, alpha.size() - 1);
        }
        if (v <= 0) throw CodeError(CodeErrorKind::NonPositiveValue, 0);
        return v;
    }

    /// Validates the text as a codeword first (malformed input throws CodeError).
    Integer decode(std::string_view text) const { return decode(Codeword::parse(text)); }

private:
    static void require_positive(Integer n) {
        if (n < 1) throw std::invalid_argument("GH code needs n >= 1, got " + to_string(n));
    }

    // Bits 1-5 from the remainder row, picked indices set, then normalize,
    // trim trailing zeros and terminate.
    static Codeword assemble(std::span<const std::uint8_t> head, std::span<const std::size_t> picked) {
        Bitstring alpha({head.begin(), head.end()});
        for (auto idx : picked) alpha.set(idx - 1, true);
        return to_codeword(trim_trailing_zeros(normalize(std::move(alpha))));
    }

    GHSequence seq_;
    RemainderTable table_;
};

// Parameter-first conveniences. Each builds a codec; hold a GHCodec when
// encoding many values.

inline std::optional<Bitstring> remainder_lookup(std::int64_t a, Integer r) { return GHCodec(a).remainder_lookup(r); }
inline GreedySplit greedy_remaining(std::int64_t a, Integer n) { return GHCodec(a).greedy_remaining(n); }
inline EncodeOutcome encode_simple(std::int64_t a, Integer n) { return GHCodec(a).encode_simple(n); }
inline EncodeOutcome encode_fast(std::int64_t a, Integer n) { return GHCodec(a).encode_fast(n); }
inline bool exists(std::int64_t a, Integer n) { return GHCodec(a).exists(n); }
inline Integer decode(std::int64_t a, const Codeword& c) { return GHCodec(a).decode(c); }
inline Integer decode(std::int64_t a, std::string_view text) { return GHCodec(a).decode(text); }

}  // namespace ghcode
