#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "lucasq/families.hpp"

using namespace lucasq;

namespace {

void require_verified(const SolutionRecord& r) {
    CHECK(r.root * r.root == r.value);
    CHECK(lucas_u(r.n, LucasParams(r.p, r.q)) == r.value);
}

}  // namespace

TEST_CASE("family n=2") {
    const auto r = family_u2(2, mpz_class(3));
    CHECK(r.p == 4);
    CHECK(r.q == 3);
    CHECK(r.value == 4);
    CHECK(r.root == 2);
    require_verified(r);

    CHECK(family_u2(1, mpz_class(-1)).value == 1);
    CHECK(family_u2(3, mpz_class(2)).p == 9);

    CHECK_THROWS_AS(family_u2(0, mpz_class(5)), std::invalid_argument);
    CHECK_THROWS_AS(family_u2(2, mpz_class(0)), std::invalid_argument);
    CHECK_THROWS_AS(family_u2(2, mpz_class(6)), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(family_u2(1, mpz_class(1)), std::invalid_argument);  // degenerate
}

TEST_CASE("family n=3") {
    auto r = family_u3(1, 2);
    CHECK(r.p == 2);
    CHECK(r.q == 3);
    CHECK(r.value == 1);
    require_verified(r);

    r = family_u3(2, 3);
    CHECK(r.p == 3);
    CHECK(r.q == 5);
    CHECK(r.value == 4);

    r = family_u3(3, 1);
    CHECK(r.q == -8);
    CHECK(r.value == 9);

    // family_u3(1,3) is a valid member: (P,Q) = (3,8), U_3 = 1.
    CHECK(family_u3(1, 3).value == 1);

    CHECK_THROWS_AS(family_u3(2, 2), std::invalid_argument);  // Q = 0
    CHECK_THROWS_AS(family_u3(0, 1), std::invalid_argument);  // (1,1) degenerate
}

TEST_CASE("family n=3 gcd edge") {
    // P = 4, a = 2 -> Q = 12, gcd(4,12) = 4.
    CHECK_THROWS_AS(family_u3(2, 4), std::invalid_argument);
}

TEST_CASE("family n=4") {
    const auto r = family_u4(1, 1, 3, U4Branch::Odd);
    CHECK(r.p == 1);
    CHECK(r.q == -4);
    CHECK(r.value == 9);
    CHECK(r.root == 3);
    require_verified(r);

    // delta = -1 members carry negative P.
    const auto neg = family_u4(-1, 1, 3, U4Branch::Odd);
    CHECK(neg.p == -1);
    CHECK(neg.q == 5);
    CHECK(neg.value == 9);
    require_verified(neg);

    CHECK_THROWS_AS(family_u4(1, 1, 1, U4Branch::Odd), std::invalid_argument);   // Q = 0
    CHECK_THROWS_AS(family_u4(1, 1, 1, U4Branch::Even), std::invalid_argument);  // (2,1)
    CHECK_THROWS_AS(family_u4(1, 2, 3, U4Branch::Odd), std::invalid_argument);   // parity
    CHECK_THROWS_AS(family_u4(1, 1, 2, U4Branch::Even), std::invalid_argument);  // parity
    CHECK_THROWS_AS(family_u4(2, 1, 3, U4Branch::Odd), std::invalid_argument);   // delta
}

TEST_CASE("family n=5") {
    const auto both = family_u5(1, 2);
    REQUIRE(both.size() == 2);
    CHECK(both[0].p == 4);
    CHECK(both[0].q == 45);
    CHECK(both[0].value == 121);
    CHECK(both[1].p == 4);
    CHECK(both[1].q == 3);
    CHECK(both[1].value == 121);
    for (const auto& r : both)
        require_verified(r);

    const auto odd = family_u5(1, 1);
    REQUIRE(odd.size() == 1);  // minus variant has Q = 0
    CHECK(odd[0].p == 1);
    CHECK(odd[0].q == 3);
    CHECK(odd[0].value == 1);

    CHECK_THROWS_AS(family_u5(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_u5(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_u5(2, 4), std::invalid_argument);  // gcd
}

TEST_CASE("family n=5 parametrization is a square identity") {
    // For every coprime pair up to 20, each integral emitted variant has
    // square U_5 (the generator would throw otherwise); additionally the
    // plus variant value is (5a^4 - b^4)^2 up to sign.
    for (long a = 1; a <= 20; ++a)
        for (long b = 1; b <= 20; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            for (const auto& r : family_u5(a, b)) {
                require_verified(r);
                const mpz_class a4 = mpz_class(a) * a * a * a;
                const mpz_class b4 = mpz_class(b) * b * b * b;
                mpz_class expected_root = abs(5 * a4 - b4);
                if ((a % 2 != 0) && (b % 2 != 0))
                    expected_root /= 4;
                CHECK(r.root == expected_root);
            }
        }
}

TEST_CASE("family n=6") {
    const auto case1 = family_u6(1, 3);
    REQUIRE(case1.size() == 1);
    CHECK(case1[0].p == 1);
    CHECK(case1[0].q == -8);
    CHECK(case1[0].value == 225);
    CHECK(case1[0].root == 15);
    require_verified(case1[0]);

    CHECK_THROWS_AS(family_u6(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(family_u6(8, 5), std::invalid_argument);
    CHECK_THROWS_AS(family_u6(1, 0), std::invalid_argument);

    for (int case_id = 1; case_id <= 7; ++case_id)
        for (const auto& r : family_u6(case_id, 12))
            require_verified(r);
}

TEST_CASE("family n=7: the first seven members") {
    const auto recs = family_u7(7);
    REQUIRE(recs.size() == 7);
    const std::vector<std::pair<long, long>> expected = {
        {1, 1}, {1, 5}, {2, -1}, {5, 21}, {1, -104}, {21, 545}, {52, 415}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(recs[i].p == expected[i].first);
        CHECK(recs[i].q == expected[i].second);
        require_verified(recs[i]);
    }
    CHECK(recs[0].degenerate);  // (1,1)
    for (std::size_t i = 1; i < recs.size(); ++i)
        CHECK_FALSE(recs[i].degenerate);

    CHECK_THROWS_AS(family_u7(0), std::invalid_argument);
}

TEST_CASE("every generated record is re-verified") {
    for (int n = 2; n <= 7; ++n) {
        const auto recs = generate_family(FamilyRequest{n, 8, 30});
        CHECK_FALSE(recs.empty());
        for (const auto& r : recs) {
            CHECK(r.n == static_cast<unsigned long>(n));
            require_verified(r);
        }
    }
}

TEST_CASE("generate_family argument validation") {
    CHECK_THROWS_AS(generate_family(FamilyRequest{1, 5, 10}), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyRequest{8, 5, 10}), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyRequest{5, 0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(FamilyRequest{5, 5, 0}), std::invalid_argument);
}
