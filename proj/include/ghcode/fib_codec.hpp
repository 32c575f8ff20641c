#pragma once
// fib_codec.hpp - classic Fibonacci universal code

#include "bitcode.hpp"
#include "sequence.hpp"

#include <stdexcept>

namespace ghcode {

inline const FibSequence& fibonacci() {
    static const FibSequence seq;
    return seq;
}

// Greedy Zeckendorf over F[1..] plus terminator. Greedy is exact for
// Fibonacci, so there is no fallback path.
inline Codeword fib_encode(Integer n) {
    if (n <= 0) throw std::invalid_argument("Fibonacci code needs n >= 1, got " + to_string(n));
    const auto& fib = fibonacci();
    Bitstring alpha;
    Integer rest = n;
    while (rest > 0) {
        const std::size_t i = *fib.largest_leq(rest);
        alpha.set(i - 1, true);
        rest -= fib.term(i);
    }
    return to_codeword(alpha);
}

inline Integer fib_decode(const Codeword& c) {
    const auto alpha = c.bits().first(c.size() - 1);
    if (alpha.size() > fibonacci().horizon()) throw CodeError(CodeErrorKind::ValueOverflow, fibonacci().horizon());
    try {
        return value(fibonacci(), alpha);
    } catch (const std::overflow_error&) {
        throw CodeError(CodeErrorKind::ValueOverflow, alpha.size() - 1);
    }
}

}  // namespace ghcode
