#pragma once
// support.hpp - test-only reference computations, independent of the library code paths

#include <ghcode/integer.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ghcode::testkit {

// Plain recurrence, 1-indexed; terms[0] unused.
inline std::vector<Integer> recurrence_terms(Integer first, Integer second, std::size_t count) {
    std::vector<Integer> t{0, first, second};
    while (t.size() <= count) t.push_back(t[t.size() - 1] + t[t.size() - 2]);
    return t;
}

inline std::vector<Integer> gh_terms(std::int64_t a, std::size_t count = 60) {
    return recurrence_terms(a, 1 - Integer{a}, count);
}

// Value of a '0'/'1' string against 1-indexed terms.
inline Integer text_value(const std::vector<Integer>& terms, const std::string& bits) {
    Integer sum = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') sum += terms[i + 1];
    }
    return sum;
}

// Remainders in [0, GH[6]) reachable by any subset of GH[1..5].
inline std::set<Integer> five_bit_reachable(std::int64_t a) {
    const auto t = gh_terms(a, 6);
    std::set<Integer> out;
    for (unsigned mask = 0; mask < 32; ++mask) {
        Integer s = 0;
        for (unsigned i = 0; i < 5; ++i) {
            if (mask & (1u << i)) s += t[i + 1];
        }
        if (s >= 0 && s < t[6]) out.insert(s);
    }
    return out;
}

// Number of subsets of non-consecutive Fibonacci indices (F[1]=1, F[2]=2)
// summing to n.
inline int fibonacci_representation_count(std::int64_t n) {
    const auto f = recurrence_terms(1, 2, 40);
    int count = 0;
    auto dfs = [&](auto&& self, std::size_t i, std::int64_t rest, bool prev_taken) -> void {
        if (rest == 0) {
            ++count;
            return;
        }
        if (i >= f.size() || f[i] > rest) return;
        self(self, i + 1, rest, false);
        if (!prev_taken) self(self, i + 1, rest - static_cast<std::int64_t>(f[i]), true);
    };
    dfs(dfs, 1, n, false);
    return count;
}

inline std::string random_bits(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::bernoulli_distribution coin(0.5);
    std::string s(len(rng), '0');
    for (auto& c : s) c = coin(rng) ? '1' : '0';
    return s;
}

}  // namespace ghcode::testkit
