#pragma once
// oracle.hpp - brute-force ground truth for GH representations
//
// The search enumerates index subsets with no two consecutive indices and
// compares sums directly. It depends only on the sequence, never on the
// codec, so it can serve as an independent witness for it.

#include "bitcode.hpp"
#include "gh_codec.hpp"
#include "integer.hpp"
#include "sequence.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ghcode {

inline constexpr std::size_t default_search_cap = 64;

/// Smallest L >= 7 with GH[L] + a > n. Any subset that uses an index >= L sums
/// above n, since GH[1] = a is the only negative term.
inline std::size_t search_bound(const GHSequence& seq, Integer n, std::size_t cap = default_search_cap) {
    std::size_t bound = 7;
    while (seq.term(bound) + seq.a() <= n) {
        ++bound;
        if (bound > cap || bound > seq.horizon()) {
            throw std::length_error("oracle search bound exceeds cap " + std::to_string(cap) + " for n=" + to_string(n));
        }
    }
    return bound;
}

namespace detail {

// Depth-first over indices 1..bound; visit(chosen) returns true to stop.
template <typename Visit>
bool enumerate_sums(const GHSequence& seq, Integer n, std::size_t bound, Visit&& visit) {
    std::vector<std::size_t> chosen;
    // Remaining positive mass reachable from index i upward, for pruning.
    std::vector<Integer> suffix(bound + 2, 0);
    for (std::size_t i = bound; i >= 1; --i) suffix[i] = suffix[i + 1] + std::max<Integer>(seq.term(i), 0);

    auto dfs = [&](auto&& self, std::size_t i, Integer sum) -> bool {
        if (i > bound) return !chosen.empty() && sum == n && visit(static_cast<const std::vector<std::size_t>&>(chosen));
        // GH[1] is the only negative term, so past index 1 the sum only grows.
        if (i >= 2 && (sum > n || sum + suffix[i] < n)) return false;
        if (self(self, i + 1, sum)) return true;
        if (chosen.empty() || chosen.back() + 1 != i) {
            chosen.push_back(i);
            const bool stop = self(self, i + 1, sum + seq.term(i));
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    };
    return dfs(dfs, 1, 0);
}

inline Codeword codeword_from_indices(const std::vector<std::size_t>& indices) {
    std::vector<std::uint8_t> bits(indices.back() + 1, 0);
    for (auto i : indices) bits[i - 1] = 1;
    bits.back() = 1;
    return Codeword::from_bits(std::move(bits));
}

}  // namespace detail

inline bool oracle_exists(const GHSequence& seq, Integer n, std::size_t cap = default_search_cap) {
    if (n < 1) throw std::invalid_argument("oracle needs n >= 1, got " + to_string(n));
    const auto bound = search_bound(seq, n, cap);
    return detail::enumerate_sums(seq, n, bound, [](const auto&) { return true; });
}

/// Same search over an explicit index range 1..max_index.
inline bool oracle_exists_within(const GHSequence& seq, Integer n, std::size_t max_index) {
    if (n < 1) throw std::invalid_argument("oracle needs n >= 1, got " + to_string(n));
    if (max_index > seq.horizon()) throw std::length_error("index range exceeds the sequence horizon");
    return detail::enumerate_sums(seq, n, max_index, [](const auto&) { return true; });
}

inline bool oracle_exists(std::int64_t a, Integer n, std::size_t cap = default_search_cap) {
    return oracle_exists(GHSequence(a), n, cap);
}

/// Every Zeckendorf representation of n, terminated; empty when none exists.
inline std::set<Codeword> all_codes(const GHSequence& seq, Integer n, std::size_t cap = default_search_cap) {
    if (n < 1) throw std::invalid_argument("oracle needs n >= 1, got " + to_string(n));
    std::set<Codeword> codes;
    const auto bound = search_bound(seq, n, cap);
    detail::enumerate_sums(seq, n, bound, [&](const std::vector<std::size_t>& chosen) {
        codes.insert(detail::codeword_from_indices(chosen));
        return false;
    });
    return codes;
}

inline std::set<Codeword> all_codes(std::int64_t a, Integer n, std::size_t cap = default_search_cap) {
    return all_codes(GHSequence(a), n, cap);
}

enum class ScanMode { Fast, Oracle };

struct GapRun {
    std::int64_t start;
    std::int64_t length;
    friend bool operator==(const GapRun&, const GapRun&) = default;
};

struct GapReport {
    std::int64_t a = 0;
    std::int64_t n_lo = 1;
    std::int64_t n_hi = 0;
    std::vector<bool> exists;  // exists[n - n_lo]
    std::vector<std::int64_t> missing;
    std::vector<GapRun> runs;
    std::int64_t max_run = 0;

    std::optional<std::int64_t> k() const { return a <= -5 ? std::optional<std::int64_t>(-(a + 4)) : std::nullopt; }

    /// Longest run the theorem allows: k for a <= -5, none for -4 <= a <= -2.
    std::int64_t allowed_run() const { return k().value_or(0); }

    void write_csv(std::ostream& os) const {
        os << "n,exists\n";
        for (std::size_t i = 0; i < exists.size(); ++i) {
            os << n_lo + static_cast<std::int64_t>(i) << ',' << (exists[i] ? 1 : 0) << '\n';
        }
    }

    nlohmann::json summary() const {
        nlohmann::json j;
        j["a"] = a;
        if (auto kk = k()) j["k"] = *kk;
        else j["k"] = nullptr;
        j["n_range"] = {n_lo, n_hi};
        j["missing"] = missing.size();
        j["max_run"] = max_run;
        auto& r = j["runs"] = nlohmann::json::array();
        for (const auto& run : runs) r.push_back({run.start, run.length});
        return j;
    }
};

/// Existence over 1..n_max, computed by the codec (Fast) or the brute-force
/// search (Oracle). Work is split into contiguous blocks across threads and
/// merged in range order, so the report does not depend on the thread count.
inline GapReport gap_scan(std::int64_t a, std::int64_t n_max, ScanMode mode, unsigned threads = 1) {
    if (n_max < 1) throw std::invalid_argument("gap scan needs n_max >= 1");
    const GHCodec codec(a);
    GapReport report;
    report.a = a;
    report.n_hi = n_max;

    std::vector<char> found(static_cast<std::size_t>(n_max), 0);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](std::int64_t lo, std::int64_t hi) {
        try {
            for (std::int64_t n = lo; n <= hi; ++n) {
                const bool ok = mode == ScanMode::Fast ? codec.exists(n) : oracle_exists(codec.sequence(), n);
                found[static_cast<std::size_t>(n - 1)] = ok ? 1 : 0;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::int64_t>(n_max, 256))));
    if (threads == 1) {
        work(1, n_max);
    } else {
        std::vector<std::jthread> pool;
        const std::int64_t block = (n_max + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::int64_t lo = 1 + static_cast<std::int64_t>(t) * block;
            const std::int64_t hi = std::min(n_max, lo + block - 1);
            if (lo > hi) break;
            pool.emplace_back(work, lo, hi);
        }
    }
    if (failure) std::rethrow_exception(failure);

    report.exists.assign(found.begin(), found.end());
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (found[static_cast<std::size_t>(n - 1)]) continue;
        report.missing.push_back(n);
        if (!report.runs.empty() && report.runs.back().start + report.runs.back().length == n) {
            ++report.runs.back().length;
        } else {
            report.runs.push_back({n, 1});
        }
    }
    for (const auto& run : report.runs) report.max_run = std::max(report.max_run, run.length);
    return report;
}

}  // namespace ghcode
