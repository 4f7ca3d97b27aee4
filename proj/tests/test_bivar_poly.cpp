#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lucasq/bivar_poly.hpp"
#include "lucasq/lucas.hpp"

using namespace lucasq;

TEST_CASE("lucas_u_poly small cases") {
    const BivarPoly p = BivarPoly::var_p();
    const BivarPoly q = BivarPoly::var_q();

    CHECK(lucas_u_poly(0).is_zero());
    CHECK(lucas_u_poly(1) == BivarPoly::constant(1));
    CHECK(lucas_u_poly(2) == p);

    // U_5 = P^4 - 3 P^2 Q + Q^2
    BivarPoly u5 = p * p * p * p - BivarPoly::constant(3) * p * p * q + q * q;
    CHECK(lucas_u_poly(5) == u5);

    // U_11 = P^10 - 9P^8 Q + 28P^6 Q^2 - 35P^4 Q^3 + 15P^2 Q^4 - Q^5
    const BivarPoly u11 = lucas_u_poly(11);
    CHECK(u11.coefficient(10, 0) == 1);
    CHECK(u11.coefficient(8, 1) == -9);
    CHECK(u11.coefficient(6, 2) == 28);
    CHECK(u11.coefficient(4, 3) == -35);
    CHECK(u11.coefficient(2, 4) == 15);
    CHECK(u11.coefficient(0, 5) == -1);
    CHECK(u11.terms().size() == 6);
}

TEST_CASE("lucas_u_poly range errors") {
    CHECK_THROWS_AS(lucas_u_poly(-1), std::out_of_range);
    CHECK_THROWS_AS(lucas_u_poly(17), std::out_of_range);
    CHECK_NOTHROW(lucas_u_poly(16));
}

TEST_CASE("polynomial evaluation matches the recurrence") {
    std::mt19937_64 rng(4711);
    std::uniform_int_distribution<long> coeff(-30, 30);
    for (int n = 0; n <= 16; ++n) {
        const BivarPoly un = lucas_u_poly(n);
        for (int i = 0; i < 100; ++i) {
            long p = coeff(rng), q = coeff(rng);
            if (p == 0)
                p = 5;
            if (q == 0)
                q = 7;
            REQUIRE(un.eval(p, q) == lucas_u(n, LucasParams(p, q)));
        }
    }
}

TEST_CASE("factorization identities hold for the whole table") {
    for (int n : {4, 5, 6, 7, 8, 10, 11})
        CHECK(verify_factorization(n));
    CHECK_THROWS_AS(verify_factorization(9), std::out_of_range);
    CHECK_THROWS_AS(verify_factorization(12), std::out_of_range);
}

TEST_CASE("grid_equal") {
    const BivarPoly p = BivarPoly::var_p();
    const BivarPoly q = BivarPoly::var_q();

    CHECK(grid_equal(p * p, p * p, 3, 1));
    CHECK_FALSE(grid_equal(p + q, p - q, 2, 2));

    // U_8 product expansion against the recurrence polynomial.
    const BivarPoly c2 = BivarPoly::constant(2);
    const BivarPoly c4 = BivarPoly::constant(4);
    const BivarPoly u8_product =
        p * (p * p - c2 * q) * (p * p * p * p - c4 * p * p * q + c2 * q * q);
    CHECK(grid_equal(u8_product, lucas_u_poly(8), 9, 5));
    CHECK(u8_product == lucas_u_poly(8));
}

TEST_CASE("arithmetic keeps no zero coefficients") {
    const BivarPoly p = BivarPoly::var_p();
    BivarPoly z = p - p;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    BivarPoly w = (p + p) - BivarPoly::constant(2) * p;
    CHECK(w.terms().empty());
}
