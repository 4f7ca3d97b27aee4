#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include "lucasq/squares.hpp"

using namespace lucasq;

namespace {

// Independent oracle: plain floor square root, no sieve.
bool naive_is_square(const mpz_class& n, mpz_class* root = nullptr) {
    if (sgn(n) < 0)
        return false;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n)
        return false;
    if (root)
        *root = r;
    return true;
}

}  // namespace

TEST_CASE("perfect square detection on known values") {
    CHECK(is_perfect_square(mpz_class(441)).value() == 21);
    CHECK(is_perfect_square(mpz_class(0)).value() == 0);
    CHECK(is_perfect_square(mpz_class(384400)).value() == 620);
    CHECK(is_perfect_square(mpz_class(144)).value() == 12);
    CHECK_FALSE(is_perfect_square(mpz_class(-4)).has_value());
    CHECK_FALSE(is_perfect_square(mpz_class(-1)).has_value());
    CHECK_FALSE(is_perfect_square(mpz_class(2)).has_value());
    CHECK_FALSE(is_perfect_square(mpz_class(440)).has_value());
}

TEST_CASE("agrees with the naive oracle on all |N| <= 10^6") {
    for (long n = -1000000; n <= 1000000; ++n) {
        const mpz_class v(n);
        mpz_class oracle_root;
        const bool oracle = naive_is_square(v, &oracle_root);
        const auto got = is_perfect_square(v);
        REQUIRE(got.has_value() == oracle);
        if (got)
            REQUIRE(*got == oracle_root);
    }
}

TEST_CASE("agrees with the naive oracle on random 256-bit integers") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260810ul);
    for (int i = 0; i < 10000; ++i) {
        const mpz_class v = rng.get_z_bits(256);
        CHECK(is_perfect_square(v).has_value() == naive_is_square(v));
    }
    // Exercise the square side too; random bit patterns are almost never
    // squares on their own.
    for (int i = 0; i < 2000; ++i) {
        const mpz_class r = rng.get_z_bits(128);
        const mpz_class sq = r * r;
        auto got = is_perfect_square(sq);
        REQUIRE(got.has_value());
        CHECK(*got == abs(r));
        CHECK_FALSE(is_perfect_square(sq + 1).has_value() != naive_is_square(sq + 1));
    }
}

TEST_CASE("residue sieve is one-sided") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(7ul);
    for (int i = 0; i < 100000; ++i) {
        const mpz_class v = rng.get_z_bits(64);
        if (!passes_square_sieve(v))
            CHECK_FALSE(naive_is_square(v));
    }
    // Squares always pass the sieve.
    for (int i = 0; i < 20000; ++i) {
        const mpz_class r = rng.get_z_bits(48);
        CHECK(passes_square_sieve(r * r));
    }
}
