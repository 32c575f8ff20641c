#pragma once
// integer.hpp - wide signed integer used for sequence terms and coded values

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghcode {

// 128 bits keeps GH terms exact up to index ~170 for |a| <= 20.
using Integer = __int128;

inline constexpr Integer integer_max = std::numeric_limits<__int128>::max();

inline std::string to_string(Integer v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    // Work on the negative side so that the minimum value does not overflow.
    std::string digits;
    Integer x = negative ? v : -v;
    while (x != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

// Parses an optionally signed decimal integer. Throws std::invalid_argument on
// malformed text and std::out_of_range when the value does not fit.
inline Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
    Integer acc = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
        const int digit = c - '0';
        if (__builtin_mul_overflow(acc, Integer{10}, &acc) ||
            __builtin_sub_overflow(acc, Integer{digit}, &acc)) {
            throw std::out_of_range("integer out of range: " + std::string(text));
        }
    }
    if (!negative) {
        if (acc == std::numeric_limits<__int128>::min()) {
            throw std::out_of_range("integer out of range: " + std::string(text));
        }
        acc = -acc;
    }
    return acc;
}

inline Integer checked_add(Integer x, Integer y) {
    Integer out;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("integer overflow");
    return out;
}

}  // namespace ghcode
