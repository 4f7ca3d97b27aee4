#pragma once

// Exhaustive scan of a coprime (P,Q) box for square values of U_n. The hot
// loop runs the recurrence once per pair, reusing U_{n-1}, U_{n-2} and a set
// of preallocated limbs; candidates go through the residue sieve before the
// exact square root. Workers split the P range and share nothing; merged
// output is a pure function of the SearchSpec (worker count excluded).

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lucasq/lucas.hpp"
#include "lucasq/squares.hpp"

namespace lucasq {

struct SearchSpec {
    int n_min = 8;
    int n_max = 12;
    long p_max = 100;
    long q_max = 100;
    int workers = 1;
};

struct SearchStats {
    unsigned long long pairs_scanned = 0;
    unsigned long long degenerate_skipped = 0;
    unsigned long long negative_skipped = 0;
    unsigned long long sieve_rejected = 0;
    unsigned long long exact_tests = 0;

    SearchStats& operator+=(const SearchStats& o) {
        pairs_scanned += o.pairs_scanned;
        degenerate_skipped += o.degenerate_skipped;
        negative_skipped += o.negative_skipped;
        sieve_rejected += o.sieve_rejected;
        exact_tests += o.exact_tests;
        return *this;
    }
};

struct SearchResult {
    std::vector<SolutionRecord> hits;  // sorted by (n, P, Q)
    SearchStats stats;
};

struct PRange {
    long lo = 1;
    long hi = 0;  // inclusive

    friend bool operator==(const PRange&, const PRange&) = default;
};

inline void validate(const SearchSpec& spec) {
    if (spec.n_min < 2 || spec.n_min > spec.n_max || spec.n_max > 16)
        throw std::invalid_argument("SearchSpec: need 2 <= n_min <= n_max <= 16");
    if (spec.p_max < 1 || spec.q_max < 1)
        throw std::invalid_argument("SearchSpec: bounds must be >= 1");
    if (spec.workers < 1)
        throw std::invalid_argument("SearchSpec: workers must be >= 1");
}

// Contiguous chunks of [1, p_max], one per worker (fewer when the range is
// short); exact and disjoint by construction.
inline std::vector<PRange> partition(const SearchSpec& spec) {
    validate(spec);
    const long n_chunks = std::min<long>(spec.workers, spec.p_max);
    std::vector<PRange> chunks;
    chunks.reserve(n_chunks);
    long lo = 1;
    for (long i = 0; i < n_chunks; ++i) {
        const long size = spec.p_max / n_chunks + (i < spec.p_max % n_chunks ? 1 : 0);
        chunks.push_back({lo, lo + size - 1});
        lo += size;
    }
    return chunks;
}

namespace detail {

inline void scan_p_range(const SearchSpec& spec, PRange range, SearchResult& out) {
    mpz_class u_prev, u_cur, t1, t2;
    for (long p = range.lo; p <= range.hi; ++p) {
        for (long q = -spec.q_max; q <= spec.q_max; ++q) {
            if (q == 0)
                continue;
            if (std::gcd(p, std::abs(q)) != 1)
                continue;
            if (q == 1 && (p == 1 || p == 2)) {
                ++out.stats.degenerate_skipped;
                continue;
            }
            ++out.stats.pairs_scanned;

            // u_prev = U_1, u_cur = U_2; step to U_n in place.
            mpz_set_ui(u_prev.get_mpz_t(), 1);
            mpz_set_si(u_cur.get_mpz_t(), p);
            for (int n = 2; n <= spec.n_max; ++n) {
                if (n > 2) {
                    mpz_mul_si(t1.get_mpz_t(), u_cur.get_mpz_t(), p);
                    mpz_mul_si(t2.get_mpz_t(), u_prev.get_mpz_t(), q);
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                    mpz_swap(u_prev.get_mpz_t(), u_cur.get_mpz_t());
                    mpz_swap(u_cur.get_mpz_t(), t1.get_mpz_t());
                }
                if (n < spec.n_min)
                    continue;
                const int s = sgn(u_cur);
                if (s < 0) {
                    ++out.stats.negative_skipped;
                    continue;
                }
                if (!passes_square_sieve(u_cur)) {
                    ++out.stats.sieve_rejected;
                    continue;
                }
                ++out.stats.exact_tests;
                mpz_sqrtrem(t1.get_mpz_t(), t2.get_mpz_t(), u_cur.get_mpz_t());
                if (t2 != 0)
                    continue;
                out.hits.push_back(SolutionRecord{static_cast<unsigned long>(n),
                                                  mpz_class(p), mpz_class(q), u_cur, t1,
                                                  false});
            }
        }
    }
}

}  // namespace detail

inline SearchResult run_search(const SearchSpec& spec) {
    validate(spec);
    const auto chunks = partition(spec);

    SearchResult merged;
    if (chunks.size() == 1) {
        detail::scan_p_range(spec, chunks[0], merged);
    } else {
        std::vector<SearchResult> parts(chunks.size());
        std::vector<std::thread> pool;
        pool.reserve(chunks.size());
        for (std::size_t i = 0; i < chunks.size(); ++i)
            pool.emplace_back(
                [&, i] { detail::scan_p_range(spec, chunks[i], parts[i]); });
        for (auto& th : pool)
            th.join();
        for (auto& part : parts) {
            merged.stats += part.stats;
            for (auto& hit : part.hits)
                merged.hits.push_back(std::move(hit));
        }
    }
    std::sort(merged.hits.begin(), merged.hits.end(), record_order);
    return merged;
}

}  // namespace lucasq
