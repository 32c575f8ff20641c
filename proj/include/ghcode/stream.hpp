#pragma once
// stream.hpp - "GHC1" container: bit-packed sequences of Fibonacci or GH codewords
//
// Layout (little-endian integers):
//   0  magic      "GHC1"
//   4  version    0x01
//   5  codec      0x00 Fibonacci, 0x01 GH
//   6  a          int16, 0 for Fibonacci
//   8  count      uint64, number of values
//   16 bit_length uint64, payload bits
//   24 payload    ceil(bit_length / 8) bytes, MSB-first, zero padded
//
// Each codeword ends at the first "11" after its start, which is what lets a
// reader realign after a damaged region.

#include "bitcode.hpp"
#include "fib_codec.hpp"
#include "gh_codec.hpp"
#include "integer.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace ghcode {

enum class Codec : std::uint8_t { Fibonacci = 0x00, GH = 0x01 };

inline constexpr std::array<std::uint8_t, 4> stream_magic{'G', 'H', 'C', '1'};
inline constexpr std::uint8_t stream_version = 0x01;
inline constexpr std::size_t stream_header_size = 24;

struct StreamHeader {
    Codec codec = Codec::Fibonacci;
    std::int16_t a = 0;
    std::uint64_t count = 0;
    std::uint64_t bit_length = 0;
};

class StreamError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class HeaderError : public StreamError {
public:
    explicit HeaderError(const std::string& what) : StreamError("header: " + what) {}
};

class PayloadError : public StreamError {
public:
    PayloadError(const std::string& what, std::uint64_t offset)
        : StreamError("payload: " + what + " at bit " + std::to_string(offset)), offset_(offset) {}
    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

class UnencodableValue : public StreamError {
public:
    UnencodableValue(Integer value, std::size_t index)
        : StreamError("value " + to_string(value) + " (element " + std::to_string(index) + ") has no code"),
          value_(value), index_(index) {}
    Integer value() const noexcept { return value_; }
    std::size_t index() const noexcept { return index_; }

private:
    Integer value_;
    std::size_t index_;
};

struct ResyncToken {
    enum class Kind { Value, Garbage };
    Kind kind = Kind::Garbage;
    Integer value = 0;         // meaningful for Kind::Value
    std::uint64_t start = 0;   // bit span [start, end) within the payload
    std::uint64_t end = 0;

    bool is_value() const noexcept { return kind == Kind::Value; }
};

struct ResyncResult {
    StreamHeader header;
    std::vector<ResyncToken> tokens;
};

namespace detail {

class BitWriter {
public:
    void write(std::span<const std::uint8_t> bits) {
        for (auto b : bits) {
            if (bit_count_ % 8 == 0) bytes_.push_back(0);
            if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
            ++bit_count_;
        }
    }
    std::uint64_t bit_count() const noexcept { return bit_count_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bit_count_ = 0;
};

inline bool bit_at(std::span<const std::uint8_t> bytes, std::uint64_t pos) {
    return (bytes[pos / 8] >> (7 - pos % 8)) & 1u;
}

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T v) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(v);
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>((u >> (8 * i)) & 0xFFu));
}

template <typename T>
T get_le(std::span<const std::uint8_t> in, std::size_t at) {
    using U = std::make_unsigned_t<T>;
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<U>(static_cast<U>(in[at + i]) << (8 * i));
    return static_cast<T>(u);
}

// Encodes/decodes single values for the codec named in a header.
class ValueCoder {
public:
    ValueCoder(Codec codec, std::int16_t a) {
        if (codec == Codec::GH) gh_.emplace(a);
    }

    std::optional<Codeword> encode(Integer n) const {
        if (n < 1) return std::nullopt;
        if (gh_) return gh_->encode(n);
        return fib_encode(n);
    }

    // Throws CodeError.
    Integer decode(std::span<const std::uint8_t> bits) const {
        const auto c = Codeword::from_bits({bits.begin(), bits.end()});
        return gh_ ? gh_->decode(c) : fib_decode(c);
    }

private:
    std::optional<GHCodec> gh_;
};

// Position just past the first "11" starting at or after pos, or nullopt.
inline std::optional<std::uint64_t> find_terminator(std::span<const std::uint8_t> bytes, std::uint64_t pos,
                                                    std::uint64_t limit) {
    for (std::uint64_t i = pos + 1; i < limit; ++i) {
        if (bit_at(bytes, i) && bit_at(bytes, i - 1)) return i + 1;
    }
    return std::nullopt;
}

inline std::vector<std::uint8_t> extract_bits(std::span<const std::uint8_t> bytes, std::uint64_t begin,
                                              std::uint64_t end) {
    std::vector<std::uint8_t> bits;
    bits.reserve(end - begin);
    for (auto i = begin; i < end; ++i) bits.push_back(bit_at(bytes, i) ? 1 : 0);
    return bits;
}

}  // namespace detail

inline StreamHeader read_stream_header(std::span<const std::uint8_t> data) {
    if (data.size() < stream_header_size) throw HeaderError("document shorter than the 24-byte header");
    for (std::size_t i = 0; i < stream_magic.size(); ++i) {
        if (data[i] != stream_magic[i]) throw HeaderError("bad magic");
    }
    if (data[4] != stream_version) throw HeaderError("unsupported version " + std::to_string(data[4]));
    StreamHeader h;
    switch (data[5]) {
        case 0x00: h.codec = Codec::Fibonacci; break;
        case 0x01: h.codec = Codec::GH; break;
        default: throw HeaderError("unknown codec " + std::to_string(data[5]));
    }
    h.a = detail::get_le<std::int16_t>(data, 6);
    h.count = detail::get_le<std::uint64_t>(data, 8);
    h.bit_length = detail::get_le<std::uint64_t>(data, 16);
    if (h.codec == Codec::Fibonacci && h.a != 0) throw HeaderError("Fibonacci stream must carry a = 0");
    if (h.codec == Codec::GH && h.a > -2) throw HeaderError("GH stream needs a <= -2, got " + std::to_string(h.a));
    return h;
}

inline std::vector<std::uint8_t> stream_encode(Codec codec, std::int16_t a, std::span<const Integer> values) {
    if (codec == Codec::Fibonacci && a != 0) throw std::invalid_argument("Fibonacci stream must use a = 0");
    const detail::ValueCoder coder(codec, a);
    detail::BitWriter payload;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto code = coder.encode(values[i]);
        if (!code) throw UnencodableValue(values[i], i);
        payload.write(code->bits());
    }

    std::vector<std::uint8_t> out(stream_magic.begin(), stream_magic.end());
    out.push_back(stream_version);
    out.push_back(static_cast<std::uint8_t>(codec));
    detail::put_le<std::int16_t>(out, a);
    detail::put_le<std::uint64_t>(out, values.size());
    detail::put_le<std::uint64_t>(out, payload.bit_count());
    out.insert(out.end(), payload.bytes().begin(), payload.bytes().end());
    return out;
}

/// Strict decode: exactly count valid codewords filling bit_length, zero padding.
inline std::vector<Integer> stream_decode(std::span<const std::uint8_t> data) {
    const auto h = read_stream_header(data);
    const auto payload = data.subspan(stream_header_size);
    const std::uint64_t needed = h.bit_length / 8 + (h.bit_length % 8 != 0 ? 1 : 0);
    if (payload.size() < needed) throw PayloadError("truncated payload", payload.size() * 8);
    if (payload.size() > needed) throw PayloadError("bytes past bit_length", needed * 8);
    for (auto i = h.bit_length; i < needed * 8; ++i) {
        if (detail::bit_at(payload, i)) throw PayloadError("nonzero padding", i);
    }

    const detail::ValueCoder coder(h.codec, h.a);
    std::vector<Integer> values;
    std::uint64_t pos = 0;
    while (values.size() < h.count) {
        const auto end = detail::find_terminator(payload, pos, h.bit_length);
        if (!end) {
            throw PayloadError("missing terminator (" + std::to_string(values.size()) + " of " +
                                   std::to_string(h.count) + " values read)",
                               pos);
        }
        try {
            values.push_back(coder.decode(detail::extract_bits(payload, pos, *end)));
        } catch (const CodeError& e) {
            throw PayloadError(e.what(), pos);
        }
        pos = *end;
    }
    if (pos != h.bit_length) throw PayloadError("bits after the last of " + std::to_string(h.count) + " values", pos);
    return values;
}

/// Tolerant decode: splits the payload at each "11" and reports every span as
/// a value or as garbage. Only header problems throw.
inline ResyncResult resync_decode(std::span<const std::uint8_t> data) {
    ResyncResult result{read_stream_header(data), {}};
    const auto payload = data.subspan(stream_header_size);
    const std::uint64_t limit = std::min<std::uint64_t>(result.header.bit_length, payload.size() * 8);
    const detail::ValueCoder coder(result.header.codec, result.header.a);

    std::uint64_t pos = 0;
    while (pos < limit) {
        ResyncToken token;
        token.start = pos;
        const auto end = detail::find_terminator(payload, pos, limit);
        token.end = end.value_or(limit);
        if (end) {
            try {
                token.value = coder.decode(detail::extract_bits(payload, pos, *end));
                token.kind = ResyncToken::Kind::Value;
            } catch (const CodeError&) {
                token.kind = ResyncToken::Kind::Garbage;
            }
        }
        result.tokens.push_back(token);
        pos = token.end;
    }
    return result;
}

}  // namespace ghcode
