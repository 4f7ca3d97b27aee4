#pragma once

// The three concrete number fields the verification suites work in, with
// their named constants (fundamental units, sqrt5, the split roots of U11)
// and the identity suite that pins all of them down.

#include <array>
#include <cstdlib>
#include <sstream>

#include "lucasq/bivar_poly.hpp"
#include "lucasq/check.hpp"
#include "lucasq/numfield.hpp"

namespace lucasq {

// K = Q(u) with u^2 = u + 1: the golden ratio field Q(sqrt5).
struct GoldenField {
    const NumberField& K;
    NFElement u;        // fundamental unit (1+sqrt5)/2, norm -1
    NFElement root5;    // 2u - 1
    Automorphism conj;  // u -> 1-u, i.e. sqrt5 -> -sqrt5
};

inline const GoldenField& golden_field() {
    static const GoldenField F = [] {
        static const NumberField K("golden", {-1, -1, 1});
        const NFElement u = K.gen();
        return GoldenField{K, u, u * 2L - 1L, Automorphism(K.one() - u)};
    }();
    return F;
}

// K = Q(g) with g^4 + 2g^2 - 1 = 0; two real embeddings at +-0.6435...
struct QuarticField {
    const NumberField& K;
    NFElement g;
    NFElement u1;          // fundamental unit g
    NFElement u2;          // fundamental unit 2 - 3g + g^2 - g^3
    NFElement one_plus_g;  // generates the prime above 2: 2 u1^4 = u2^2 (1+g)^4
    Automorphism neg;      // g -> -g
};

inline const QuarticField& quartic_field() {
    static const QuarticField F = [] {
        static const NumberField K("quartic", {-1, 0, 2, 0, 1});
        const NFElement g = K.gen();
        const NFElement u2 = K.integer(2) - g * 3L + g * g - g.pow(3);
        return QuarticField{K, g, g, u2, g + 1L, Automorphism(-g)};
    }();
    return F;
}

// K = Q(t) with t^5 + t^4 - 4t^3 - 3t^2 + 3t + 1 = 0: the real quintic
// subfield of the 11th cyclotomic field (t = zeta + 1/zeta), totally real
// and cyclic over Q.
struct QuinticField {
    const NumberField& K;
    NFElement t;
    std::array<NFElement, 4> u;  // unit group generators, all of norm +1
    Automorphism sigma;          // t -> t^2 - 2, generates Gal(K/Q), order 5
    // Split roots r1..r5: U11(P,Q) = prod_j (r_j P^2 - Q). r1 = (t+2)^{-1}
    // and sigma shifts r_j -> r_{j+1} cyclically; with this labelling the
    // embedding at the smallest real root orders them r1 > r4 > r5 > r3 > r2
    // (checked in the registry suite).
    std::array<NFElement, 5> r;
};

inline const QuinticField& quintic_field() {
    static const QuinticField F = [] {
        static const NumberField K("quintic", {1, 3, -3, -4, 1, 1});
        const NFElement t = K.gen();
        Automorphism sigma(t * t - 2L);
        std::array<NFElement, 4> u = {
            -t,
            -(t * t) + 2L,
            -t.pow(4) + (t * t) * 4L - 2L,
            -t.pow(3) + t * 3L,
        };
        std::array<NFElement, 5> r;
        r[0] = (t + 2L).inverse();
        for (int j = 1; j < 5; ++j)
            r[j] = sigma(r[j - 1]);
        return QuinticField{K, t, u, sigma, r};
    }();
    return F;
}

enum class FieldId { Quartic, Golden, Quintic };

namespace detail {

// Spot-checks backing the irreducibility of the defining polynomials:
// no rational root (monic, so candidates divide the constant term) and no
// monic quadratic factor with coefficients bounded by 10.
inline bool modulus_has_rational_root(const NumberField& K) {
    const mpz_class c0 = K.modulus()[0].get_num();
    mpz_class a = abs(c0);
    for (mpz_class d = 1; d <= a; ++d) {
        if (a % d != 0)
            continue;
        const mpq_class dw(d);
        if (ratpoly::eval(K.modulus(), dw) == 0 || ratpoly::eval(K.modulus(), -dw) == 0)
            return true;
    }
    return false;
}

inline bool modulus_has_small_quadratic_factor(const NumberField& K, long bound) {
    if (K.degree() < 4)
        return false;  // a quadratic factor would force a rational root pairing
    for (long b = -bound; b <= bound; ++b)
        for (long c = -bound; c <= bound; ++c) {
            const ratpoly::Poly q{mpq_class(c), mpq_class(b), mpq_class(1)};
            if (ratpoly::rem(K.modulus(), q).empty())
                return true;
        }
    return false;
}

inline CheckItem irreducibility_check(const NumberField& K, const std::string& prefix) {
    const bool root = modulus_has_rational_root(K);
    const bool quad = modulus_has_small_quadratic_factor(K, 10);
    return make_check(prefix + ".modulus-irreducible",
                      "defining polynomial has no rational root and no quadratic "
                      "factor with |coefficients| <= 10",
                      !root && !quad);
}

inline std::string q_str(const mpq_class& v) { return v.get_str(); }

}  // namespace detail

inline CheckReport verify_quartic_registry() {
    const auto& F = quartic_field();
    CheckReport rep;
    const mpq_class n1 = F.K.norm(F.u1);
    rep.push_back(make_check("quartic.u1-unit", "N(g) = -1", n1 == -1,
                             "N = " + detail::q_str(n1)));
    const mpq_class n2 = F.K.norm(F.u2);
    rep.push_back(make_check("quartic.u2-unit", "N(2 - 3g + g^2 - g^3) = +-1",
                             n2 == 1 || n2 == -1, "N = " + detail::q_str(n2)));
    const mpq_class n3 = F.K.norm(F.one_plus_g);
    rep.push_back(make_check("quartic.norm-one-plus-g", "N(1+g) = 2", n3 == 2,
                             "N = " + detail::q_str(n3)));
    rep.push_back(make_check("quartic.two-factorization", "2 g^4 = u2^2 (1+g)^4",
                             F.u1.pow(4) * 2L == F.u2 * F.u2 * F.one_plus_g.pow(4)));
    rep.push_back(make_check("quartic.neg-automorphism", "g -> -g fixes the modulus",
                             F.neg(F.g) == -F.g && F.neg(F.neg(F.g)) == F.g));
    rep.push_back(detail::irreducibility_check(F.K, "quartic"));
    return rep;
}

inline CheckReport verify_golden_registry() {
    const auto& F = golden_field();
    CheckReport rep;
    const mpq_class nu = F.K.norm(F.u);
    rep.push_back(make_check("golden.unit-norm", "N(u) = -1", nu == -1,
                             "N = " + detail::q_str(nu)));
    rep.push_back(make_check("golden.conj-unit", "conj(u) = -u^-1",
                             F.conj(F.u) == -F.u.inverse()));
    rep.push_back(make_check("golden.root5-square", "(2u-1)^2 = 5",
                             F.root5 * F.root5 == F.K.integer(5)));
    rep.push_back(make_check("golden.conj-root5", "conj(2u-1) = -(2u-1)",
                             F.conj(F.root5) == -F.root5));
    rep.push_back(detail::irreducibility_check(F.K, "golden"));
    return rep;
}

inline CheckReport verify_quintic_registry() {
    const auto& F = quintic_field();
    const NumberField& K = F.K;
    CheckReport rep;

    {
        bool ok = true;
        std::ostringstream detail;
        for (int i = 0; i < 4; ++i) {
            const mpq_class n = K.norm(F.u[i]);
            ok = ok && n == 1;
            detail << (i ? ", " : "") << "N(u" << i + 1 << ") = " << n.get_str();
        }
        rep.push_back(make_check("quintic.unit-norms", "N(u1) = ... = N(u4) = +1", ok,
                                 detail.str()));
    }

    {
        NFElement img = F.t;
        for (int i = 0; i < 5; ++i)
            img = F.sigma(img);
        rep.push_back(make_check("quintic.sigma-order-5",
                                 "sigma: t -> t^2-2 has order exactly 5",
                                 img == F.t && F.sigma(F.t) == F.t * F.t - 2L &&
                                     !(F.sigma(F.t) == F.t)));
    }

    {
        const NFElement prod_inv = (F.u[0] * F.u[1] * F.u[2] * F.u[3]).inverse();
        const bool ok = F.sigma(F.u[0]) == F.u[1] && F.sigma(F.u[1]) == F.u[2] &&
                        F.sigma(F.u[2]) == F.u[3] && F.sigma(F.u[3]) == prod_inv;
        rep.push_back(make_check("quintic.unit-cocycle",
                                 "sigma(u_i) = u_{i+1} for i=1..3 and "
                                 "sigma(u4) = (u1 u2 u3 u4)^-1",
                                 ok));
    }

    {
        // r_j (tau_j + 2) = 1 where tau_j runs over the sigma-orbit of t.
        bool ok = true;
        NFElement tau = F.t;
        for (int j = 0; j < 5; ++j) {
            ok = ok && F.r[j] * (tau + 2L) == K.one();
            tau = F.sigma(tau);
        }
        rep.push_back(make_check("quintic.split-root-inverses",
                                 "r_j (tau_j + 2) = 1 along the sigma-orbit of t", ok));
    }

    {
        bool ok = true;
        for (int j = 0; j < 5; ++j)
            ok = ok && F.sigma(F.r[j]) == F.r[(j + 1) % 5];
        rep.push_back(
            make_check("quintic.split-roots-cyclic", "sigma shifts r_j -> r_{j+1}", ok));
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (int j = 0; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                const mpq_class n = K.norm(F.r[j] - F.r[k]);
                ok = ok && (n == 11 || n == -11);
                detail << "N(r" << j + 1 << "-r" << k + 1 << ")=" << n.get_str() << " ";
            }
        rep.push_back(make_check("quintic.split-root-norm-gaps",
                                 "N(r_j - r_k) = +-11 for j != k", ok, detail.str()));
    }

    {
        // Degree bounds (10 in P, 5 in Q) make agreement on the 11x6 integer
        // grid equivalent to the polynomial identity.
        const BivarPoly u11 = lucas_u_poly(11);
        bool ok = true;
        for (long p = 0; p <= 10 && ok; ++p)
            for (long q = 0; q <= 5 && ok; ++q) {
                NFElement acc = K.one();
                for (int j = 0; j < 5; ++j)
                    acc = acc * (F.r[j] * (p * p) - q);
                ok = acc.is_rational() && acc.rational_value() == u11.eval(p, q);
            }
        rep.push_back(make_check("quintic.u11-splitting",
                                 "prod_j (r_j P^2 - Q) = U11(P,Q) on the 11x6 grid", ok));
    }

    {
        // Embedding at the smallest real root of the modulus.
        const bool ok = K.sign_at_root(F.r[0] - F.r[3], 0) > 0 &&
                        K.sign_at_root(F.r[3] - F.r[4], 0) > 0 &&
                        K.sign_at_root(F.r[4] - F.r[2], 0) > 0 &&
                        K.sign_at_root(F.r[2] - F.r[1], 0) > 0;
        rep.push_back(make_check("quintic.embedding-order",
                                 "r1 > r4 > r5 > r3 > r2 at the smallest real root", ok));
    }

    {
        const bool ok = K.sign_at_root(F.u[0], 0) > 0 && K.sign_at_root(F.u[1], 0) < 0 &&
                        K.sign_at_root(F.u[2], 0) < 0 && K.sign_at_root(F.u[3], 0) > 0;
        rep.push_back(make_check("quintic.unit-signs",
                                 "(u1,u2,u3,u4) have signs (+,-,-,+) at the smallest "
                                 "real root",
                                 ok));
    }

    rep.push_back(detail::irreducibility_check(K, "quintic"));
    return rep;
}

inline CheckReport verify_constant_registry(FieldId id) {
    switch (id) {
        case FieldId::Quartic: return verify_quartic_registry();
        case FieldId::Golden: return verify_golden_registry();
        case FieldId::Quintic: return verify_quintic_registry();
    }
    std::abort();
}

}  // namespace lucasq
