#pragma once

// Exact bivariate polynomials in (P,Q) over the integers, just enough to
// state and verify the U_n factorization identities coefficient by
// coefficient.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lucasq/lucas.hpp"

namespace lucasq {

class BivarPoly {
  public:
    using Key = std::pair<int, int>;  // (deg_P, deg_Q)

    BivarPoly() = default;

    static BivarPoly constant(mpz_class c) {
        BivarPoly r;
        r.set(0, 0, std::move(c));
        return r;
    }
    static BivarPoly var_p() {
        BivarPoly r;
        r.set(1, 0, 1);
        return r;
    }
    static BivarPoly var_q() {
        BivarPoly r;
        r.set(0, 1, 1);
        return r;
    }

    // Zero coefficients are never stored.
    void set(int dp, int dq, mpz_class c) {
        if (c == 0)
            coeffs_.erase({dp, dq});
        else
            coeffs_[{dp, dq}] = std::move(c);
    }

    mpz_class coefficient(int dp, int dq) const {
        auto it = coeffs_.find({dp, dq});
        return it == coeffs_.end() ? mpz_class(0) : it->second;
    }

    bool is_zero() const { return coeffs_.empty(); }

    int degree_p() const {
        int d = 0;
        for (const auto& [k, c] : coeffs_)
            d = std::max(d, k.first);
        return d;
    }
    int degree_q() const {
        int d = 0;
        for (const auto& [k, c] : coeffs_)
            d = std::max(d, k.second);
        return d;
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [k, c] : o.coeffs_) {
            auto it = coeffs_.find(k);
            if (it == coeffs_.end()) {
                coeffs_.emplace(k, c);
            } else {
                it->second += c;
                if (it->second == 0)
                    coeffs_.erase(it);
            }
        }
        return *this;
    }

    BivarPoly& operator-=(const BivarPoly& o) {
        for (const auto& [k, c] : o.coeffs_) {
            auto it = coeffs_.find(k);
            if (it == coeffs_.end()) {
                coeffs_.emplace(k, -c);
            } else {
                it->second -= c;
                if (it->second == 0)
                    coeffs_.erase(it);
            }
        }
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) {
                Key k{ka.first + kb.first, ka.second + kb.second};
                auto it = r.coeffs_.find(k);
                if (it == r.coeffs_.end()) {
                    it = r.coeffs_.emplace(k, 0).first;
                }
                it->second += ca * cb;
                if (it->second == 0)
                    r.coeffs_.erase(it);
            }
        return r;
    }

    friend BivarPoly operator*(const mpz_class& c, const BivarPoly& a) {
        BivarPoly r;
        if (c == 0)
            return r;
        for (const auto& [k, v] : a.coeffs_)
            r.coeffs_.emplace(k, c * v);
        return r;
    }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    mpz_class eval(const mpz_class& p, const mpz_class& q) const {
        // Horner in Q over collected P-powers would be overkill at these
        // degrees; plain power accumulation is exact and fine.
        mpz_class sum = 0;
        for (const auto& [k, c] : coeffs_) {
            mpz_class term = c;
            for (int i = 0; i < k.first; ++i)
                term *= p;
            for (int i = 0; i < k.second; ++i)
                term *= q;
            sum += term;
        }
        return sum;
    }

    const std::map<Key, mpz_class>& terms() const { return coeffs_; }

  private:
    std::map<Key, mpz_class> coeffs_;
};

// U_n(P,Q) as an exact polynomial, n <= 16.
inline BivarPoly lucas_u_poly(int n) {
    if (n < 0 || n > 16)
        throw std::out_of_range("lucas_u_poly: n must be in [0,16]");
    BivarPoly prev;                            // U_0 = 0
    BivarPoly cur = BivarPoly::constant(1);    // U_1 = 1
    if (n == 0)
        return prev;
    const BivarPoly p = BivarPoly::var_p();
    const BivarPoly q = BivarPoly::var_q();
    for (int i = 1; i < n; ++i) {
        BivarPoly next = p * cur - q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

// The stated factorizations of U_n over Z, as polynomial factor lists.
inline std::vector<BivarPoly> u_factorization(int n) {
    const BivarPoly p = BivarPoly::var_p();
    const BivarPoly q = BivarPoly::var_q();
    const BivarPoly p2 = p * p;
    auto c = [](long v) { return BivarPoly::constant(v); };
    switch (n) {
        case 4:  // P * (P^2 - 2Q)
            return {p, p2 - c(2) * q};
        case 5:  // P^4 - 3 P^2 Q + Q^2
            return {p2 * p2 - c(3) * p2 * q + q * q};
        case 6:  // P * (P^2 - Q) * (P^2 - 3Q)
            return {p, p2 - q, p2 - c(3) * q};
        case 7:  // P^6 - 5 P^4 Q + 6 P^2 Q^2 - Q^3
            return {p2 * p2 * p2 - c(5) * p2 * p2 * q + c(6) * p2 * q * q - q * q * q};
        case 8:  // P * (P^2 - 2Q) * (P^4 - 4 P^2 Q + 2 Q^2)
            return {p, p2 - c(2) * q, p2 * p2 - c(4) * p2 * q + c(2) * q * q};
        case 10:  // P * (P^4 - 3 P^2 Q + Q^2) * (P^4 - 5 P^2 Q + 5 Q^2)
            return {p, p2 * p2 - c(3) * p2 * q + q * q,
                    p2 * p2 - c(5) * p2 * q + c(5) * q * q};
        case 11:  // P^10 - 9 P^8 Q + 28 P^6 Q^2 - 35 P^4 Q^3 + 15 P^2 Q^4 - Q^5
        {
            const BivarPoly p4 = p2 * p2;
            return {p4 * p4 * p2 - c(9) * p4 * p4 * q + c(28) * p4 * p2 * q * q -
                    c(35) * p4 * q * q * q + c(15) * p2 * q * q * q * q -
                    q * q * q * q * q};
        }
        default:
            throw std::out_of_range("u_factorization: no table entry for this n");
    }
}

}  // namespace detail

// Expands the tabulated product for U_n and compares it, coefficient by
// coefficient, against the recurrence polynomial.
inline bool verify_factorization(int n) {
    auto factors = detail::u_factorization(n);  // throws for n not in table
    BivarPoly product = BivarPoly::constant(1);
    for (const auto& f : factors)
        product = product * f;
    return product == lucas_u_poly(n);
}

// Identity test on the integer grid {0..deg_p} x {0..deg_q}; equivalent to
// polynomial equality when the bounds cover the true degrees.
inline bool grid_equal(const BivarPoly& a, const BivarPoly& b, int deg_p, int deg_q) {
    for (int i = 0; i <= deg_p; ++i)
        for (int j = 0; j <= deg_q; ++j)
            if (a.eval(i, j) != b.eval(i, j))
                return false;
    return true;
}

}  // namespace lucasq
