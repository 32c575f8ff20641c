#pragma once
// sequence.hpp - Gopala-Hemachandra and Fibonacci sequences
//
// Both sequences are indexed from 1 and obey t[i] = t[i-1] + t[i-2]. Terms are
// precomputed up to the last index whose value fits in Integer, so a sequence
// object is immutable after construction and safe to share across threads.

#include "integer.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghcode {

// Any additive sequence usable for evaluating a bit representation.
template <typename S>
concept TermSequence = requires(const S& s, std::size_t i) {
    { s.term(i) } -> std::same_as<Integer>;
    { s.horizon() } -> std::convertible_to<std::size_t>;
};

namespace detail {

// Fills terms[1..] from the two seeds until the next term would overflow.
inline std::vector<Integer> build_terms(Integer first, Integer second) {
    std::vector<Integer> terms{0, first, second};
    for (;;) {
        Integer next;
        if (__builtin_add_overflow(terms[terms.size() - 1], terms[terms.size() - 2], &next)) break;
        terms.push_back(next);
    }
    return terms;
}

[[noreturn]] inline void throw_bad_index(std::size_t i, std::size_t horizon) {
    if (i == 0) throw std::invalid_argument("sequence index must be >= 1");
    throw std::out_of_range("sequence index " + std::to_string(i) +
                            " exceeds the 128-bit horizon " + std::to_string(horizon));
}

}  // namespace detail

/// Fibonacci numbers with F[1] = 1, F[2] = 2 (the coding convention).
class FibSequence {
public:
    FibSequence() : terms_(detail::build_terms(1, 2)) {}

    Integer term(std::size_t i) const {
        if (i == 0 || i >= terms_.size()) detail::throw_bad_index(i, horizon());
        return terms_[i];
    }

    /// Largest valid index.
    std::size_t horizon() const noexcept { return terms_.size() - 1; }

    /// Largest i with F[i] <= n, or nullopt when n < 1.
    std::optional<std::size_t> largest_leq(Integer n) const {
        const auto it = std::upper_bound(terms_.begin() + 1, terms_.end(), n);
        if (it == terms_.begin() + 1) return std::nullopt;
        return static_cast<std::size_t>(it - terms_.begin() - 1);
    }

private:
    std::vector<Integer> terms_;
};

/// GH_a sequence: a, 1-a, 1, 2-a, 3-a, ... for a <= -2.
///
/// Indices 1..5 form the initial segment; from index 6 onwards the terms are
/// positive and strictly increasing (the remaining segment).
class GHSequence {
public:
    static constexpr std::size_t first_remaining = 6;

    explicit GHSequence(std::int64_t a) : a_(a) {
        if (a > -2) throw std::invalid_argument("GH parameter a must be <= -2, got " + std::to_string(a));
        terms_ = detail::build_terms(Integer{a}, Integer{1} - a);
    }

    std::int64_t a() const noexcept { return a_; }

    /// k = -(a + 4) for a <= -5; nullopt for the universal parameters -2, -3, -4.
    std::optional<std::int64_t> gap_parameter() const noexcept {
        if (a_ <= -5) return -(a_ + 4);
        return std::nullopt;
    }

    Integer term(std::size_t i) const {
        if (i == 0 || i >= terms_.size()) detail::throw_bad_index(i, horizon());
        return terms_[i];
    }

    std::size_t horizon() const noexcept { return terms_.size() - 1; }

    /// Largest l >= 6 with GH[l] <= n, or nullopt when GH[6] > n.
    std::optional<std::size_t> largest_remaining_leq(Integer n) const {
        const auto first = terms_.begin() + first_remaining;
        const auto it = std::upper_bound(first, terms_.end(), n);
        if (it == first) return std::nullopt;
        return static_cast<std::size_t>(it - terms_.begin() - 1);
    }

private:
    std::int64_t a_;
    std::vector<Integer> terms_;
};

}  // namespace ghcode
