#pragma once

// Generators for the infinite families with U_n(P,Q) square, n = 2..7.
// Each family hands its candidates through verified_record, so nothing is
// emitted on the strength of algebra alone.
//
// n = 2..6 come from explicit parametrizations / bounded case enumeration;
// n = 7 walks the multiples of the generator (-1,1) on y^2 = x^3+6x^2+5x+1.

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lucasq/ec.hpp"
#include "lucasq/lucas.hpp"
#include "lucasq/squares.hpp"

namespace lucasq {

struct FamilyRequest {
    int n = 7;
    int count = 5;
    long coeff_bound = 100;  // parameter box for the (a,b)-driven families
};

namespace detail {

// Shared validity gate: nonzero, coprime, non-degenerate; then re-verify.
inline SolutionRecord checked_family_record(unsigned long n, mpz_class p, mpz_class q) {
    if (p == 0 || q == 0)
        throw std::invalid_argument("family: P and Q must be non-zero");
    LucasParams params(std::move(p), std::move(q));
    if (!params.coprime())
        throw std::invalid_argument("family: gcd(P,Q) must be 1");
    if (is_degenerate(params))
        throw std::invalid_argument("family: degenerate pair rejected");
    auto rec = verified_record(n, params);
    if (!rec)
        throw std::logic_error("family: parametrized value is not a square");
    return *rec;
}

}  // namespace detail

// U_2 = P: square iff P = a^2.
inline SolutionRecord family_u2(long a, const mpz_class& q) {
    if (a < 1)
        throw std::invalid_argument("family_u2: a must be >= 1");
    return detail::checked_family_record(2, mpz_class(a) * a, q);
}

// U_3 = P^2 - Q: square iff P^2 - Q = a^2, i.e. Q = P^2 - a^2.
inline SolutionRecord family_u3(long a, long p) {
    if (a < 0)
        throw std::invalid_argument("family_u3: a must be >= 0");
    const mpz_class p2 = mpz_class(p) * p;
    return detail::checked_family_record(3, p, p2 - mpz_class(a) * a);
}

// U_4 = P (P^2 - 2Q): odd branch P = d a^2, Q = (a^4 - d b^2)/2 with ab odd;
// even branch P = 2 d a^2, Q = 2a^4 - d b^2 with b odd. U_4 = (ab)^2 resp.
// (2ab)^2.
enum class U4Branch { Odd, Even };

inline SolutionRecord family_u4(int delta, long a, long b, U4Branch branch) {
    if (delta != 1 && delta != -1)
        throw std::invalid_argument("family_u4: delta must be +-1");
    if (a < 1 || b < 1)
        throw std::invalid_argument("family_u4: a and b must be >= 1");
    const mpz_class a2 = mpz_class(a) * a;
    const mpz_class a4 = a2 * a2;
    const mpz_class b2 = mpz_class(b) * b;
    mpz_class p, q;
    if (branch == U4Branch::Odd) {
        if (a % 2 == 0 || b % 2 == 0)
            throw std::invalid_argument("family_u4: odd branch needs ab odd");
        p = delta * a2;
        q = a4 - delta * b2;
        if (mpz_odd_p(q.get_mpz_t()))
            throw std::invalid_argument("family_u4: Q not integral");
        q /= 2;
    } else {
        if (b % 2 == 0)
            throw std::invalid_argument("family_u4: even branch needs b odd");
        p = 2 * delta * a2;
        q = 2 * a4 - delta * b2;
    }
    return detail::checked_family_record(4, std::move(p), std::move(q));
}

// U_5 = P^4 - 3P^2 Q + Q^2. Opposite parity: (P,Q) = (2ab, +-(5a^4 +- 6a^2b^2
// + b^4)); both odd: (ab, quarter variants). Every integral variant is run
// through the verifier; Q = 0, gcd and degeneracy drops are silent.
inline std::vector<SolutionRecord> family_u5(long a, long b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("family_u5: a and b must be non-zero");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("family_u5: gcd(a,b) must be 1");
    const mpz_class s = mpz_class(a) * a;
    const mpz_class t = mpz_class(b) * b;
    const mpz_class plus = 5 * s * s + 6 * s * t + t * t;
    const mpz_class minus = -5 * s * s + 6 * s * t - t * t;
    const bool both_odd = (a % 2 != 0) && (b % 2 != 0);
    mpz_class p = abs(mpz_class(a) * b);
    if (!both_odd)
        p *= 2;

    std::vector<SolutionRecord> out;
    for (const mpz_class& num : {plus, minus}) {
        mpz_class q = num;
        if (both_odd) {
            if (mpz_fdiv_ui(q.get_mpz_t(), 4) != 0)
                continue;
            q /= 4;
        }
        if (q == 0)
            continue;
        LucasParams params(p, q);
        if (!params.coprime() || is_degenerate(params))
            continue;
        if (auto rec = verified_record(5, params))
            out.push_back(std::move(*rec));
    }
    return out;
}

// U_6 = P (P^2 - Q)(P^2 - 3Q); the seven sign/shape cases, enumerated over
// 1 <= a,b <= bound with the quartic side condition tested exactly.
//   1: P =  a^2, P^2 - Q =  b^2,  -2a^4 + 3b^2 = square
//   2: P =  a^2, P^2 - Q = -2b^2,   a^4 + 3b^2 = square
//   3: P = -a^2, P^2 - Q =  2b^2,   a^4 - 3b^2 = square
//   4..7: P = 3a^2, P^2 - Q = d b^2 (d = 1,-1,2,-2), b^2 - (6/d) a^4 = square
inline std::vector<SolutionRecord> family_u6(int case_id, long bound) {
    if (case_id < 1 || case_id > 7)
        throw std::invalid_argument("family_u6: case_id must be 1..7");
    if (bound < 1)
        throw std::invalid_argument("family_u6: bound must be >= 1");

    std::vector<SolutionRecord> out;
    for (long a = 1; a <= bound; ++a) {
        const mpz_class a2 = mpz_class(a) * a;
        const mpz_class a4 = a2 * a2;
        for (long b = 1; b <= bound; ++b) {
            const mpz_class b2 = mpz_class(b) * b;
            mpz_class cond, p, q;
            switch (case_id) {
                case 1:
                    cond = -2 * a4 + 3 * b2;
                    p = a2;
                    q = a4 - b2;
                    break;
                case 2:
                    cond = a4 + 3 * b2;
                    p = a2;
                    q = a4 + 2 * b2;
                    break;
                case 3:
                    cond = a4 - 3 * b2;
                    p = -a2;
                    q = a4 - 2 * b2;
                    break;
                default: {
                    static constexpr long deltas[4] = {1, -1, 2, -2};
                    const long d = deltas[case_id - 4];
                    cond = b2 - (6 / d) * a4;
                    p = 3 * a2;
                    q = 9 * a4 - d * b2;
                    break;
                }
            }
            if (!is_perfect_square(cond))
                continue;
            if (p == 0 || q == 0)
                continue;
            LucasParams params(std::move(p), std::move(q));
            if (!params.coprime() || is_degenerate(params))
                continue;
            auto rec = verified_record(6, params);
            if (!rec)
                throw std::logic_error("family_u6: case condition held but U6 not square");
            out.push_back(std::move(*rec));
        }
    }
    return out;
}

// Walks k = 1, 2, 3, ... multiples of (-1,1) on y^2 = x^3 + 6x^2 + 5x + 1.
// For x(kP0) = u/v in lowest terms, v is a perfect square s^2 (asserted per
// point) and the member is (P,Q) = (s, -u). Q = 0 (the multiple with x = 0)
// is dropped; degenerate members stay in the stream but carry the flag.
inline std::vector<SolutionRecord> family_u7(int count) {
    if (count < 1)
        throw std::invalid_argument("family_u7: count must be >= 1");
    const CurveQ curve = u7_curve();
    const RationalPoint base = u7_generator();

    std::vector<SolutionRecord> out;
    RationalPoint cur = base;
    while (static_cast<int>(out.size()) < count) {
        const mpz_class u = cur.x.get_num();
        const mpz_class v = cur.x.get_den();
        cur = ec_add(curve, cur, base);
        auto s = is_perfect_square(v);
        if (!s)
            throw std::logic_error("family_u7: x-denominator is not a square");
        if (u == 0)
            continue;
        LucasParams params(*s, -u);
        if (!params.coprime())
            throw std::logic_error("family_u7: non-coprime member");
        auto rec = verified_record(7, params);
        if (!rec)
            throw std::logic_error("family_u7: U7 not a square on the curve");
        out.push_back(std::move(*rec));
    }
    return out;
}

// Deterministic enumeration behind `family` on the command line.
inline std::vector<SolutionRecord> generate_family(const FamilyRequest& req) {
    if (req.n < 2 || req.n > 7)
        throw std::invalid_argument("generate_family: n must be in 2..7");
    if (req.count < 1 || req.coeff_bound < 1)
        throw std::invalid_argument("generate_family: count and bound must be >= 1");

    std::vector<SolutionRecord> out;
    const auto done = [&] { return static_cast<int>(out.size()) >= req.count; };
    const auto try_push = [&](auto&& make) {
        try {
            out.push_back(make());
        } catch (const std::invalid_argument&) {
            // parameter combination outside the family's validity gate
        }
    };

    switch (req.n) {
        case 2:
            for (long a = 1; a <= req.coeff_bound && !done(); ++a)
                for (long qa = 1; qa <= req.coeff_bound && !done(); ++qa)
                    for (long q : {qa, -qa}) {
                        if (done())
                            break;
                        try_push([&] { return family_u2(a, mpz_class(q)); });
                    }
            break;
        case 3:
            for (long a = 1; a <= req.coeff_bound && !done(); ++a)
                for (long p = 1; p <= req.coeff_bound && !done(); ++p)
                    try_push([&] { return family_u3(a, p); });
            break;
        case 4:
            for (long a = 1; a <= req.coeff_bound && !done(); ++a)
                for (long b = 1; b <= req.coeff_bound && !done(); ++b)
                    for (int delta : {1, -1})
                        for (U4Branch branch : {U4Branch::Odd, U4Branch::Even}) {
                            if (done())
                                break;
                            try_push([&] { return family_u4(delta, a, b, branch); });
                        }
            break;
        case 5:
            for (long a = 1; a <= req.coeff_bound && !done(); ++a)
                for (long b = 1; b <= req.coeff_bound && !done(); ++b) {
                    if (std::gcd(a, b) != 1)
                        continue;
                    for (auto& rec : family_u5(a, b)) {
                        if (done())
                            break;
                        out.push_back(std::move(rec));
                    }
                }
            break;
        case 6:
            for (int case_id = 1; case_id <= 7 && !done(); ++case_id)
                for (auto& rec : family_u6(case_id, req.coeff_bound)) {
                    if (done())
                        break;
                    out.push_back(std::move(rec));
                }
            break;
        case 7:
            return family_u7(req.count);
    }
    return out;
}

}  // namespace lucasq
