#pragma once

// Exact evaluation of Lucas sequences U_n(P,Q):
//   U_0 = 0,  U_1 = 1,  U_n = P*U_{n-1} - Q*U_{n-2}.
// Both an O(n) iterative evaluator and an O(log n) doubling evaluator are
// provided; they are cross-checked in the test suite.

#include <gmpxx.h>

#include <bit>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "lucasq/squares.hpp"

namespace lucasq {

enum class Degeneracy {
    NonDegenerate,
    Periodic,     // (P,Q) = (+-1,1): U is periodic with period 3
    Linear,       // (P,Q) = (2,1):   U_n = n
    Alternating,  // (P,Q) = (-2,1):  U_n = (-1)^(n+1) * n
};

struct LucasParams {
    mpz_class p;
    mpz_class q;

    LucasParams(mpz_class p_, mpz_class q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p == 0 || q == 0)
            throw std::invalid_argument("LucasParams: P and Q must be non-zero");
    }

    bool coprime() const { return gcd(p, q) == 1; }
};

inline Degeneracy classify_degenerate(const LucasParams& s) {
    if (s.q == 1) {
        if (s.p == 1 || s.p == -1)
            return Degeneracy::Periodic;
        if (s.p == 2)
            return Degeneracy::Linear;
        if (s.p == -2)
            return Degeneracy::Alternating;
    }
    return Degeneracy::NonDegenerate;
}

inline bool is_degenerate(const LucasParams& s) {
    return classify_degenerate(s) != Degeneracy::NonDegenerate;
}

inline const char* degeneracy_name(Degeneracy d) {
    switch (d) {
        case Degeneracy::Periodic: return "periodic";
        case Degeneracy::Linear: return "linear";
        case Degeneracy::Alternating: return "alternating";
        default: return "non_degenerate";
    }
}

inline mpz_class lucas_u(unsigned long n, const LucasParams& s) {
    mpz_class prev = 0;  // U_0
    if (n == 0)
        return prev;
    mpz_class cur = 1;  // U_1
    mpz_class next;
    for (unsigned long i = 1; i < n; ++i) {
        next = s.p * cur - s.q * prev;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return cur;
}

// Doubling evaluator. Walks the bits of n tracking (U_m, V_m, Q^m), where V
// is the companion sequence (V_0 = 2, V_1 = P), via
//   U_{2m} = U_m V_m,   V_{2m} = V_m^2 - 2 Q^m,
//   U_{m+1} = (P U_m + V_m)/2,   V_{m+1} = ((P^2-4Q) U_m + P V_m)/2,
// with both step numerators exactly even.
inline mpz_class lucas_u_doubling(unsigned long n, const LucasParams& s) {
    if (n == 0)
        return 0;
    mpz_class u = 1, v = s.p, qk = s.q;
    const mpz_class disc = s.p * s.p - 4 * s.q;
    const int top = std::bit_width(n) - 1;
    mpz_class u2, v2;
    for (int i = top - 1; i >= 0; --i) {
        u2 = u * v;
        v2 = v * v - 2 * qk;
        qk *= qk;
        if ((n >> i) & 1ul) {
            u = (s.p * u2 + v2) / 2;
            v = (disc * u2 + s.p * v2) / 2;
            qk *= s.q;
        } else {
            std::swap(u, u2);
            std::swap(v, v2);
        }
    }
    return u;
}

// A verified hit: U_n(P,Q) = root^2 exactly.
struct SolutionRecord {
    unsigned long n = 0;
    mpz_class p, q;
    mpz_class value;
    mpz_class root;
    bool degenerate = false;

    friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
        return a.n == b.n && a.p == b.p && a.q == b.q && a.value == b.value &&
               a.root == b.root;
    }
};

// Deterministic output order used by search and the generators.
inline bool record_order(const SolutionRecord& a, const SolutionRecord& b) {
    return std::tie(a.n, a.p, a.q) < std::tie(b.n, b.p, b.q);
}

// Recomputes U_n and keeps the record only if it really is a square; the
// generators go through this instead of trusting their own algebra.
inline std::optional<SolutionRecord> verified_record(unsigned long n, const LucasParams& s) {
    mpz_class value = lucas_u(n, s);
    auto root = is_perfect_square(value);
    if (!root)
        return std::nullopt;
    return SolutionRecord{n, s.p, s.q, std::move(value), std::move(*root), is_degenerate(s)};
}

}  // namespace lucasq
