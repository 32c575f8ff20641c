#pragma once
// bitcode.hpp - bit representations over sequence indices and terminated codewords
//
// Text form: the leftmost character is the bit for index 1, exactly as codes
// are usually printed ("01011" is GH[2] + GH[4] followed by the terminator).

#include "integer.hpp"
#include "sequence.hpp"

#include <compare>
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

class Bitstring {
public:
    Bitstring() = default;
    explicit Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] > 1) throw std::invalid_argument("bit " + std::to_string(i) + " is not 0 or 1");
        }
    }

    static Bitstring parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') {
                throw std::invalid_argument("invalid bit character at offset " + std::to_string(i));
            }
            bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
        }
        return Bitstring(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    // Zero-based: bit(0) is the coefficient of sequence index 1.
    std::uint8_t bit(std::size_t pos) const { return bits_.at(pos); }
    void set(std::size_t pos, bool on) {
        if (pos >= bits_.size()) bits_.resize(pos + 1, 0);
        bits_[pos] = on ? 1 : 0;
    }
    void push_back(bool on) { bits_.push_back(on ? 1 : 0); }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::string to_string() const {
        std::string out;
        out.reserve(bits_.size());
        for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
        return out;
    }

    friend auto operator<=>(const Bitstring&, const Bitstring&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

enum class CodeErrorKind {
    TooShort,              // fewer than two bits
    MissingTerminator,     // does not end in "11"
    InteriorAdjacentOnes,  // "11" before the terminator
    NonPositiveValue,      // well formed, but the value is <= 0
    ValueOverflow,         // well formed, but longer than the 128-bit horizon
};

inline const char* describe(CodeErrorKind kind) noexcept {
    switch (kind) {
        case CodeErrorKind::TooShort: return "codeword shorter than two bits";
        case CodeErrorKind::MissingTerminator: return "codeword does not end in 11";
        case CodeErrorKind::InteriorAdjacentOnes: return "interior adjacent ones";
        case CodeErrorKind::NonPositiveValue: return "codeword value is not positive";
        case CodeErrorKind::ValueOverflow: return "codeword value exceeds the 128-bit horizon";
    }
    return "unknown code error";
}

/// Raised when a bit string fails to decode. offset is the zero-based bit
/// position where the violation was detected.
class CodeError : public std::runtime_error {
public:
    CodeError(CodeErrorKind kind, std::size_t offset)
        : std::runtime_error(std::string(describe(kind)) + " at bit " + std::to_string(offset)),
          kind_(kind), offset_(offset) {}

    CodeErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

    /// Structural violations; NonPositiveValue and ValueOverflow concern the value.
    bool malformed() const noexcept {
        return kind_ == CodeErrorKind::TooShort || kind_ == CodeErrorKind::MissingTerminator ||
               kind_ == CodeErrorKind::InteriorAdjacentOnes;
    }

private:
    CodeErrorKind kind_;
    std::size_t offset_;
};

/// First structural violation of the codeword rules, if any.
inline std::optional<CodeError> check_codeword(std::span<const std::uint8_t> c) {
    if (c.size() < 2) return CodeError(CodeErrorKind::TooShort, c.size());
    const std::size_t last = c.size() - 1;
    for (std::size_t i = 0; i + 1 < last; ++i) {
        if (c[i] && c[i + 1]) return CodeError(CodeErrorKind::InteriorAdjacentOnes, i);
    }
    if (!c[last - 1]) return CodeError(CodeErrorKind::MissingTerminator, last - 1);
    if (!c[last]) return CodeError(CodeErrorKind::MissingTerminator, last);
    return std::nullopt;
}

/// A terminated bit string: ends in "11" with no other adjacent ones.
class Codeword {
public:
    static Codeword from_bits(std::vector<std::uint8_t> bits) {
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] > 1) throw std::invalid_argument("bit " + std::to_string(i) + " is not 0 or 1");
        }
        if (auto err = check_codeword(bits)) throw *err;
        return Codeword(std::move(bits));
    }

    static Codeword parse(std::string_view text) {
        auto b = Bitstring::parse(text);
        return from_bits({b.bits().begin(), b.bits().end()});
    }

    std::size_t size() const noexcept { return bits_.size(); }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::string to_string() const {
        std::string out;
        out.reserve(bits_.size());
        for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
        return out;
    }

    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    explicit Codeword(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    std::vector<std::uint8_t> bits_;
};

/// Sum of bits[i] * seq.term(i + 1). Empty input gives 0.
template <TermSequence Seq>
Integer value(const Seq& seq, std::span<const std::uint8_t> bits) {
    Integer sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) sum = checked_add(sum, seq.term(i + 1));
    }
    return sum;
}

template <TermSequence Seq>
Integer value(const Seq& seq, const Bitstring& b) {
    return value(seq, b.bits());
}

namespace detail {

inline std::optional<std::size_t> rightmost_adjacent_pair(const Bitstring& b) {
    for (std::size_t i = b.size(); i >= 2; --i) {
        if (b.bit(i - 2) && b.bit(i - 1)) return i - 2;
    }
    return std::nullopt;
}

}  // namespace detail

/// Removes adjacent ones by rewriting the rightmost "11" pair into "001"
/// (valid for any sequence with t[i] + t[i+1] = t[i+2]). The output is one bit
/// longer than the input when the rightmost pair sits at the very end.
/// on_step sees the string after every rewrite.
template <typename OnStep>
Bitstring normalize(Bitstring b, OnStep&& on_step) {
    while (auto pos = detail::rightmost_adjacent_pair(b)) {
        b.set(*pos, false);
        b.set(*pos + 1, false);
        b.set(*pos + 2, true);
        on_step(static_cast<const Bitstring&>(b));
    }
    return b;
}

inline Bitstring normalize(Bitstring b) {
    return normalize(std::move(b), [](const Bitstring&) {});
}

inline Bitstring trim_trailing_zeros(Bitstring b) {
    std::vector<std::uint8_t> bits(b.bits().begin(), b.bits().end());
    while (!bits.empty() && bits.back() == 0) bits.pop_back();
    return Bitstring(std::move(bits));
}

/// Nonempty, no adjacent ones, last bit set.
inline bool is_zeckendorf(const Bitstring& b) {
    if (b.empty() || !b.bit(b.size() - 1)) return false;
    return !detail::rightmost_adjacent_pair(b).has_value();
}

inline Codeword to_codeword(const Bitstring& b) {
    if (!is_zeckendorf(b)) throw std::invalid_argument("not a Zeckendorf representation: " + b.to_string());
    std::vector<std::uint8_t> bits(b.bits().begin(), b.bits().end());
    bits.push_back(1);
    return Codeword::from_bits(std::move(bits));
}

inline Bitstring from_codeword(const Codeword& c) {
    auto bits = c.bits();
    return Bitstring({bits.begin(), bits.end() - 1});
}

}  // namespace ghcode
