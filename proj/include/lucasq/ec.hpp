#pragma once

// Chord-and-tangent group law on a long Weierstrass cubic
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6,
// generic over the coefficient field: instantiated with exact rationals for
// curves over Q and with number-field elements for the curves over K.
// No floating point anywhere.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>

namespace lucasq {

template <class K>
struct Weierstrass {
    K a1, a2, a3, a4, a6;
};

template <class K>
struct ECPoint {
    bool infinity = true;
    K x{};
    K y{};

    ECPoint() = default;
    ECPoint(K x_, K y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}

    static ECPoint at_infinity() { return ECPoint(); }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity)
            return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

namespace detail {
template <class K>
bool is_zero_elem(const K& v) {
    return v == v - v;
}
}  // namespace detail

template <class K>
K ec_discriminant(const Weierstrass<K>& c) {
    const K b2 = c.a1 * c.a1 + c.a2 * 4L;
    const K b4 = c.a4 * 2L + c.a1 * c.a3;
    const K b6 = c.a3 * c.a3 + c.a6 * 4L;
    const K b8 = c.a1 * c.a1 * c.a6 + c.a2 * c.a6 * 4L - c.a1 * c.a3 * c.a4 +
                 c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    return b2 * b2 * b8 * (-1L) - b4 * b4 * b4 * 8L - b6 * b6 * 27L + b2 * b4 * b6 * 9L;
}

template <class K>
void require_nonsingular(const Weierstrass<K>& c) {
    if (detail::is_zero_elem(ec_discriminant(c)))
        throw std::invalid_argument("Weierstrass curve is singular");
}

template <class K>
bool on_curve(const Weierstrass<K>& c, const ECPoint<K>& pt) {
    if (pt.infinity)
        return true;
    const K lhs = pt.y * pt.y + c.a1 * pt.x * pt.y + c.a3 * pt.y;
    const K rhs = pt.x * pt.x * pt.x + c.a2 * pt.x * pt.x + c.a4 * pt.x + c.a6;
    return lhs == rhs;
}

template <class K>
ECPoint<K> ec_negate(const Weierstrass<K>& c, const ECPoint<K>& pt) {
    if (pt.infinity)
        return pt;
    return ECPoint<K>(pt.x, pt.y * (-1L) - c.a1 * pt.x - c.a3);
}

template <class K>
ECPoint<K> ec_add(const Weierstrass<K>& c, const ECPoint<K>& p, const ECPoint<K>& q) {
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;

    K lambda, nu;
    if (p.x == q.x) {
        // Inverse pair -> identity; this also catches 2-torsion doubling.
        if (q.y == p.y * (-1L) - c.a1 * p.x - c.a3)
            return ECPoint<K>::at_infinity();
        const K den = p.y * 2L + c.a1 * p.x + c.a3;
        lambda = (p.x * p.x * 3L + c.a2 * p.x * 2L + c.a4 - c.a1 * p.y) / den;
        nu = (p.x * p.x * p.x * (-1L) + c.a4 * p.x + c.a6 * 2L - c.a3 * p.y) / den;
    } else {
        const K den = q.x - p.x;
        lambda = (q.y - p.y) / den;
        nu = (p.y * q.x - q.y * p.x) / den;
    }
    K x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    K y3 = (lambda + c.a1) * x3 * (-1L) - nu - c.a3;
    return ECPoint<K>(std::move(x3), std::move(y3));
}

template <class K>
ECPoint<K> ec_scalar_mul(const Weierstrass<K>& c, long k, const ECPoint<K>& p) {
    if (k == 0 || p.infinity)
        return ECPoint<K>::at_infinity();
    const ECPoint<K> base = k < 0 ? ec_negate(c, p) : p;
    unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
    ECPoint<K> acc = ECPoint<K>::at_infinity();
    ECPoint<K> addend = base;
    while (m != 0) {
        if (m & 1ul)
            acc = ec_add(c, acc, addend);
        m >>= 1;
        if (m != 0)
            addend = ec_add(c, addend, addend);
    }
    return acc;
}

using CurveQ = Weierstrass<mpq_class>;
using RationalPoint = ECPoint<mpq_class>;

// y^2 = x^3 + 6x^2 + 5x + 1, the curve behind the U_7 parametrization
// (x = -Q/P^2); rank 1 with generator (-1, 1).
inline CurveQ u7_curve() {
    CurveQ c{0, 6, 0, 5, 1};
    require_nonsingular(c);
    return c;
}

inline RationalPoint u7_generator() { return RationalPoint(mpq_class(-1), mpq_class(1)); }

}  // namespace lucasq
