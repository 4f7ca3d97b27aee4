#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "lucasq/fields.hpp"
#include "lucasq/numfield.hpp"

using namespace lucasq;

namespace {

NFElement random_element(const NumberField& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<mpq_class> c;
    for (int i = 0; i < k.degree(); ++i) {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        c.push_back(std::move(v));
    }
    return k.element(std::move(c));
}

// Independent norm oracle: determinant of the multiplication-by-x matrix in
// the power basis, by Gaussian elimination over Q.
mpq_class matrix_norm(const NumberField& k, const NFElement& x) {
    const int d = k.degree();
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, mpq_class(0)));
    NFElement col = x;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i)
            m[i][j] = col.coords()[i];
        col = col * k.gen();
    }
    mpq_class det = 1;
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int r = c; r < d; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < d; ++r) {
            if (m[r][c] == 0)
                continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (int cc = c; cc < d; ++cc)
                m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

const NumberField& each_field(int i) {
    switch (i) {
        case 0: return quartic_field().K;
        case 1: return golden_field().K;
        default: return quintic_field().K;
    }
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    const auto& G = golden_field();
    // u(u-1) = 1, i.e. u^-1 = u - 1
    CHECK(G.u * (G.u - 1L) == G.K.one());
    CHECK(G.u.inverse() == G.u - 1L);

    const auto& Q = quartic_field();
    // defining relation rearranged: g^4 + 2g^2 = 1
    CHECK(Q.g * Q.g.pow(3) + (Q.g * Q.g) * 2L == Q.K.one());

    CHECK_THROWS_AS(G.K.zero().inverse(), std::domain_error);
}

TEST_CASE("inverse and division roundtrip") {
    std::mt19937_64 rng(7);
    for (int f = 0; f < 3; ++f) {
        const NumberField& k = each_field(f);
        for (int i = 0; i < 40; ++i) {
            const NFElement x = random_element(k, rng);
            if (x.is_zero())
                continue;
            CHECK(x * x.inverse() == k.one());
            const NFElement y = random_element(k, rng);
            CHECK((y / x) * x == y);
        }
    }
}

TEST_CASE("norms of the registry constants") {
    const auto& Q = quartic_field();
    CHECK(Q.K.norm(Q.one_plus_g) == 2);
    CHECK(Q.K.norm(Q.u1) == -1);
    const mpq_class n2 = Q.K.norm(Q.u2);
    CHECK((n2 == 1 || n2 == -1));

    const auto& G = golden_field();
    CHECK(G.K.norm(G.u) == -1);

    const auto& C = quintic_field();
    for (const auto& unit : C.u)
        CHECK(C.K.norm(unit) == 1);
}

TEST_CASE("norm against closed form in the golden field") {
    // N(a + b u) = a^2 + ab - b^2.
    const auto& G = golden_field();
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> v(-20, 20);
    for (int i = 0; i < 200; ++i) {
        const long a = v(rng), b = v(rng);
        const NFElement x = G.K.integer(a) + G.u * b;
        CHECK(G.K.norm(x) == mpq_class(a * a + a * b - b * b));
    }
}

TEST_CASE("resultant norm equals multiplication-matrix determinant") {
    std::mt19937_64 rng(9);
    for (int f = 0; f < 3; ++f) {
        const NumberField& k = each_field(f);
        for (int i = 0; i < 30; ++i) {
            const NFElement x = random_element(k, rng);
            CHECK(k.norm(x) == matrix_norm(k, x));
        }
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(10);
    for (int f = 0; f < 3; ++f) {
        const NumberField& k = each_field(f);
        for (int i = 0; i < 100; ++i) {
            const NFElement x = random_element(k, rng);
            const NFElement y = random_element(k, rng);
            CHECK(k.norm(x * y) == k.norm(x) * k.norm(y));
        }
    }
}

TEST_CASE("automorphisms") {
    const auto& G = golden_field();
    // conj: u -> 1-u sends sqrt5 = 2u-1 to -sqrt5.
    CHECK(G.conj(G.root5) == -G.root5);
    CHECK(G.conj(G.u) == -G.u.inverse());

    const auto& C = quintic_field();
    NFElement img = C.t;
    for (int i = 0; i < 5; ++i)
        img = C.sigma(img);
    CHECK(img == C.t);

    // An image that is not a root of the modulus is rejected.
    CHECK_THROWS_AS(Automorphism(G.u + 1L), std::invalid_argument);
    CHECK_THROWS_AS(Automorphism(C.t * 2L), std::invalid_argument);
}

TEST_CASE("automorphisms are ring homomorphisms") {
    std::mt19937_64 rng(11);
    const auto& C = quintic_field();
    for (int i = 0; i < 100; ++i) {
        const NFElement x = random_element(C.K, rng);
        const NFElement y = random_element(C.K, rng);
        CHECK(C.sigma(x + y) == C.sigma(x) + C.sigma(y));
        CHECK(C.sigma(x * y) == C.sigma(x) * C.sigma(y));
    }
    const auto& Q = quartic_field();
    for (int i = 0; i < 100; ++i) {
        const NFElement x = random_element(Q.K, rng);
        const NFElement y = random_element(Q.K, rng);
        CHECK(Q.neg(x * y) == Q.neg(x) * Q.neg(y));
    }
}

TEST_CASE("real embeddings and signs") {
    const auto& C = quintic_field();
    // The quintic is totally real with 5 isolated roots; the generator is
    // negative at the smallest one (-1.9189...).
    REQUIRE(C.K.real_roots().size() == 5);
    CHECK(C.K.sign_at_root(C.t, 0) < 0);
    CHECK(C.K.sign_at_root(C.K.zero(), 0) == 0);
    CHECK(C.K.sign_at_root(C.t, 4) > 0);  // largest root 1.6825...

    // Unit signs at the smallest root: (+, -, -, +).
    CHECK(C.K.sign_at_root(C.u[0], 0) > 0);
    CHECK(C.K.sign_at_root(C.u[1], 0) < 0);
    CHECK(C.K.sign_at_root(C.u[2], 0) < 0);
    CHECK(C.K.sign_at_root(C.u[3], 0) > 0);

    const auto& Q = quartic_field();
    REQUIRE(Q.K.real_roots().size() == 2);
    CHECK(Q.K.sign_at_root(Q.g, 1) > 0);  // 0.6435...
    CHECK(Q.K.sign_at_root(Q.g, 0) < 0);  // -0.6435...

    const auto& G = golden_field();
    REQUIRE(G.K.real_roots().size() == 2);
    CHECK(G.K.sign_at_root(G.root5, 1) > 0);  // embedding with u = 1.618...
    CHECK(G.K.sign_at_root(G.root5, 0) < 0);
}

TEST_CASE("sign respects multiplication") {
    std::mt19937_64 rng(12);
    const auto& C = quintic_field();
    for (int i = 0; i < 60; ++i) {
        const NFElement x = random_element(C.K, rng);
        const NFElement y = random_element(C.K, rng);
        const int sx = C.K.sign_at_root(x, 0);
        const int sy = C.K.sign_at_root(y, 0);
        CHECK(C.K.sign_at_root(x * y, 0) == sx * sy);
    }
}

TEST_CASE("rational elements") {
    const auto& G = golden_field();
    const NFElement two = G.K.integer(2);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);
    CHECK_FALSE(G.u.is_rational());
    CHECK_THROWS_AS(G.u.rational_value(), std::domain_error);
}
