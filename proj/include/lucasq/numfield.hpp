#pragma once

// Exact arithmetic in Q[x]/(f) for a monic irreducible integer polynomial f,
// in the power basis. Norms are computed as resultants, real embeddings are
// handled through isolating intervals with adaptive bisection, so every sign
// decision is rigorous. No floating point.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lucasq {

namespace ratpoly {

// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
using Poly = std::vector<mpq_class>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline mpq_class eval(const Poly& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

inline std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
    assert(!b.empty());
    trim(a);
    if (a.size() < b.size())
        return {Poly{}, std::move(a)};
    Poly quot(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size()) {
        mpq_class factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
        if (a.empty())
            break;
    }
    trim(quot);
    return {std::move(quot), std::move(a)};
}

inline Poly rem(Poly a, const Poly& b) { return divrem(std::move(a), b).second; }

inline Poly monic_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const mpq_class lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

inline mpq_class qpow(const mpq_class& base, int e) {
    mpq_class acc = 1;
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

// Res(a,b) by the Euclidean recursion
//   Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b,r).
// For monic a of degree d this equals the product of b over the roots of a.
inline mpq_class resultant(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    bool negative = false;
    while (true) {
        const int m = degree(a);
        const int n = degree(b);
        if (n == 0) {
            acc *= qpow(b[0], m);
            break;
        }
        Poly r = rem(a, b);
        trim(r);
        if (r.empty())
            return 0;
        acc *= qpow(b.back(), m - degree(r));
        if ((m & 1) && (n & 1))
            negative = !negative;
        a = std::move(b);
        b = std::move(r);
    }
    return negative ? -acc : acc;
}

}  // namespace ratpoly

// Closed interval with rational endpoints.
struct RatInterval {
    mpq_class lo;
    mpq_class hi;
};

class NumberField;

class NFElement {
  public:
    NFElement() = default;  // detached placeholder (point at infinity, etc.)

    const NumberField& field() const {
        assert(field_ != nullptr);
        return *field_;
    }
    const std::vector<mpq_class>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0)
                return false;
        return true;
    }

    // Rational elements have all higher power-basis coordinates zero.
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0)
                return false;
        return true;
    }
    mpq_class rational_value() const {
        if (!is_rational())
            throw std::domain_error("NFElement: not a rational element");
        return coords_.empty() ? mpq_class(0) : coords_[0];
    }

    NFElement operator-() const;
    NFElement inverse() const;
    NFElement pow(long e) const;

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);

    NFElement operator*(long s) const;
    NFElement operator+(long s) const;
    NFElement operator-(long s) const;
    NFElement operator*(const mpq_class& s) const;

    friend bool operator==(const NFElement& a, const NFElement& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

    std::string str() const;

  private:
    friend class NumberField;
    friend class Automorphism;
    NFElement(const NumberField* f, std::vector<mpq_class> c)
        : field_(f), coords_(std::move(c)) {}

    const NumberField* field_ = nullptr;
    std::vector<mpq_class> coords_;
};

class NumberField {
  public:
    // monic_coeffs: ascending integer coefficients of the defining
    // polynomial, leading coefficient 1. Real roots are isolated once here.
    NumberField(std::string name, std::vector<long> monic_coeffs)
        : name_(std::move(name)) {
        if (monic_coeffs.size() < 3 || monic_coeffs.back() != 1)
            throw std::invalid_argument("NumberField: need a monic polynomial of degree >= 2");
        modulus_.reserve(monic_coeffs.size());
        for (long c : monic_coeffs)
            modulus_.emplace_back(c);
        deg_ = ratpoly::degree(modulus_);
        isolate_real_roots();
    }

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

    int degree() const { return deg_; }
    const std::string& name() const { return name_; }
    const ratpoly::Poly& modulus() const { return modulus_; }

    // Isolating intervals of the real roots, ascending; each interval
    // brackets exactly one sign change of the modulus.
    const std::vector<RatInterval>& real_roots() const { return roots_; }

    NFElement zero() const { return element(std::vector<mpq_class>(deg_, mpq_class(0))); }
    NFElement one() const { return rational(mpq_class(1)); }
    NFElement gen() const {
        std::vector<mpq_class> c(deg_, mpq_class(0));
        c[1] = 1;
        return NFElement(this, std::move(c));
    }
    NFElement rational(mpq_class v) const {
        std::vector<mpq_class> c(deg_, mpq_class(0));
        c[0] = std::move(v);
        return NFElement(this, std::move(c));
    }
    NFElement integer(long v) const { return rational(mpq_class(v)); }
    NFElement element(std::vector<mpq_class> coords) const {
        if (static_cast<int>(coords.size()) != deg_)
            throw std::invalid_argument("NumberField::element: coordinate count != degree");
        return NFElement(this, std::move(coords));
    }

    // Field norm N(x), computed exactly as Res(f, coordinate polynomial).
    mpq_class norm(const NFElement& x) const {
        assert(&x.field() == this);
        ratpoly::Poly g = x.coords_;
        ratpoly::trim(g);
        if (g.empty())
            return 0;
        return ratpoly::resultant(modulus_, g);
    }

    // Rigorous sign of x under the real embedding picked out by an isolating
    // interval. Exact zeros are certified by the gcd of the coordinate
    // polynomial with the modulus; otherwise interval evaluation with
    // adaptive refinement terminates on any nonzero element.
    int sign_at(const NFElement& x, RatInterval iso) const {
        assert(&x.field() == this);
        ratpoly::Poly g = x.coords_;
        ratpoly::trim(g);
        if (g.empty())
            return 0;
        if (ratpoly::degree(ratpoly::monic_gcd(g, modulus_)) >= 1)
            return 0;
        for (int iter = 0; iter < 512; ++iter) {
            const auto [lo, hi] = interval_eval(g, iso);
            if (sgn(lo) > 0)
                return 1;
            if (sgn(hi) < 0)
                return -1;
            bisect(iso);
        }
        throw std::logic_error("sign_at: failed to separate from zero");
    }

    int sign_at_root(const NFElement& x, std::size_t root_index) const {
        if (root_index >= roots_.size())
            throw std::out_of_range("sign_at_root: no such real root");
        return sign_at(x, roots_[root_index]);
    }

  private:
    friend class NFElement;
    friend class Automorphism;
    friend NFElement operator*(const NFElement& a, const NFElement& b);

    // Reduce a coefficient vector of size up to 2d-1 modulo the monic
    // modulus, in place; result occupies the first d slots.
    void reduce(std::vector<mpq_class>& t) const {
        for (int i = static_cast<int>(t.size()) - 1; i >= deg_; --i) {
            if (t[i] == 0)
                continue;
            const mpq_class c = t[i];
            t[i] = 0;
            for (int j = 0; j < deg_; ++j)
                t[i - deg_ + j] -= c * modulus_[j];
        }
        t.resize(deg_);
    }

    static std::pair<mpq_class, mpq_class> interval_eval(const ratpoly::Poly& g,
                                                         const RatInterval& iv) {
        mpq_class lo = g.back(), hi = g.back();
        for (int i = static_cast<int>(g.size()) - 2; i >= 0; --i) {
            const mpq_class p1 = lo * iv.lo;
            const mpq_class p2 = lo * iv.hi;
            const mpq_class p3 = hi * iv.lo;
            const mpq_class p4 = hi * iv.hi;
            lo = std::min(std::min(p1, p2), std::min(p3, p4)) + g[i];
            hi = std::max(std::max(p1, p2), std::max(p3, p4)) + g[i];
        }
        return {std::move(lo), std::move(hi)};
    }

    void bisect(RatInterval& iv) const {
        const mpq_class mid = (iv.lo + iv.hi) / 2;
        const int s_lo = sgn(ratpoly::eval(modulus_, iv.lo));
        const int s_mid = sgn(ratpoly::eval(modulus_, mid));
        if (s_mid == 0)
            throw std::logic_error("bisect: rational root of an irreducible modulus");
        if (s_lo * s_mid < 0)
            iv.hi = mid;
        else
            iv.lo = mid;
    }

    // Sign-change scan over a coarse rational mesh inside the Cauchy bound,
    // then bisection down to width 2^-10. Assumes (as holds for the moduli
    // used here) that distinct real roots are farther apart than the mesh
    // step.
    void isolate_real_roots() {
        long bound = 0;
        for (const auto& c : modulus_) {
            const mpq_class a = abs(c);
            if (a > bound)
                bound = static_cast<long>(mpz_get_si(mpq_class(a).get_num().get_mpz_t())) + 1;
        }
        bound += 1;
        const mpq_class step(1, 8);
        mpq_class x = -bound;
        int s_prev = sgn(ratpoly::eval(modulus_, x));
        if (s_prev == 0)
            throw std::logic_error("isolate_real_roots: root on the mesh");
        while (x < bound) {
            const mpq_class x2 = x + step;
            const int s = sgn(ratpoly::eval(modulus_, x2));
            if (s == 0)
                throw std::logic_error("isolate_real_roots: root on the mesh");
            if (s != s_prev) {
                RatInterval iv{x, x2};
                for (int i = 0; i < 7; ++i)  // width 1/8 -> 1/1024
                    bisect(iv);
                roots_.push_back(std::move(iv));
            }
            x = x2;
            s_prev = s;
        }
    }

    std::string name_;
    ratpoly::Poly modulus_;
    int deg_ = 0;
    std::vector<RatInterval> roots_;
};

inline NFElement operator+(const NFElement& a, const NFElement& b) {
    assert(a.field_ == b.field_ && a.field_ != nullptr);
    std::vector<mpq_class> c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coords_[i];
    return NFElement(a.field_, std::move(c));
}

inline NFElement operator-(const NFElement& a, const NFElement& b) {
    assert(a.field_ == b.field_ && a.field_ != nullptr);
    std::vector<mpq_class> c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b.coords_[i];
    return NFElement(a.field_, std::move(c));
}

inline NFElement operator*(const NFElement& a, const NFElement& b) {
    assert(a.field_ == b.field_ && a.field_ != nullptr);
    const int d = a.field_->degree();
    std::vector<mpq_class> t(2 * d - 1, mpq_class(0));
    for (int i = 0; i < d; ++i) {
        if (a.coords_[i] == 0)
            continue;
        for (int j = 0; j < d; ++j)
            t[i + j] += a.coords_[i] * b.coords_[j];
    }
    a.field_->reduce(t);
    return NFElement(a.field_, std::move(t));
}

inline NFElement NFElement::operator-() const {
    std::vector<mpq_class> c = coords_;
    for (auto& v : c)
        v = -v;
    return NFElement(field_, std::move(c));
}

inline NFElement NFElement::operator*(long s) const {
    std::vector<mpq_class> c = coords_;
    for (auto& v : c)
        v *= s;
    return NFElement(field_, std::move(c));
}

inline NFElement NFElement::operator*(const mpq_class& s) const {
    std::vector<mpq_class> c = coords_;
    for (auto& v : c)
        v *= s;
    return NFElement(field_, std::move(c));
}

inline NFElement NFElement::operator+(long s) const {
    std::vector<mpq_class> c = coords_;
    c[0] += s;
    return NFElement(field_, std::move(c));
}

inline NFElement NFElement::operator-(long s) const {
    std::vector<mpq_class> c = coords_;
    c[0] -= s;
    return NFElement(field_, std::move(c));
}

// Extended Euclid of the coordinate polynomial against the modulus.
inline NFElement NFElement::inverse() const {
    assert(field_ != nullptr);
    ratpoly::Poly r0 = coords_;
    ratpoly::trim(r0);
    if (r0.empty())
        throw std::domain_error("NFElement::inverse: division by zero");
    ratpoly::Poly r1 = field_->modulus();
    ratpoly::Poly s0{mpq_class(1)};
    ratpoly::Poly s1{};
    while (!r1.empty()) {
        auto [q, r] = ratpoly::divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ratpoly::Poly s2 = ratpoly::sub(std::move(s0), ratpoly::mul(q, s1));
        s0 = s1;
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant: s-chain ended one step behind the r-chain.
    assert(ratpoly::degree(r0) == 0);
    std::vector<mpq_class> c(field_->degree(), mpq_class(0));
    for (std::size_t i = 0; i < s0.size(); ++i)
        c[i] = s0[i] / r0[0];
    return NFElement(field_, std::move(c));
}

inline NFElement operator/(const NFElement& a, const NFElement& b) {
    return a * b.inverse();
}

inline NFElement NFElement::pow(long e) const {
    assert(field_ != nullptr);
    if (e < 0)
        return inverse().pow(-e);
    NFElement acc = field_->one();
    NFElement base = *this;
    unsigned long m = static_cast<unsigned long>(e);
    while (m != 0) {
        if (m & 1ul)
            acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

inline std::string NFElement::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ", ";
        s += coords_[i].get_str();
    }
    return s + "]";
}

// A field automorphism given by the image of the generator; the image is
// validated to be another root of the modulus.
class Automorphism {
  public:
    explicit Automorphism(NFElement gen_image) : img_(std::move(gen_image)) {
        const NumberField& k = img_.field();
        NFElement probe = k.zero();
        const auto& f = k.modulus();
        for (auto it = f.rbegin(); it != f.rend(); ++it)
            probe = probe * img_ + k.rational(*it);
        if (!probe.is_zero())
            throw std::invalid_argument("Automorphism: image is not a root of the modulus");
    }

    const NFElement& generator_image() const { return img_; }

    NFElement operator()(const NFElement& x) const {
        const NumberField& k = img_.field();
        assert(&x.field() == &k);
        NFElement acc = k.zero();
        const auto& c = x.coords();
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            acc = acc * img_ + k.rational(c[i]);
        return acc;
    }

  private:
    NFElement img_;
};

inline NFElement apply_automorphism(const NFElement& x, const NFElement& gen_image) {
    return Automorphism(gen_image)(x);
}

}  // namespace lucasq
