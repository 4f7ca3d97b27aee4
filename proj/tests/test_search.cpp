#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lucasq/families.hpp"
#include "lucasq/search.hpp"

using namespace lucasq;

TEST_CASE("theorem box, desk scale") {
    const auto res = run_search(SearchSpec{8, 12, 100, 100, 1});
    REQUIRE(res.hits.size() == 3);

    CHECK(res.hits[0].n == 8);
    CHECK(res.hits[0].p == 1);
    CHECK(res.hits[0].q == -4);
    CHECK(res.hits[0].value == 441);
    CHECK(res.hits[0].root == 21);

    CHECK(res.hits[1].n == 8);
    CHECK(res.hits[1].p == 4);
    CHECK(res.hits[1].q == -17);
    CHECK(res.hits[1].value == 384400);
    CHECK(res.hits[1].root == 620);

    CHECK(res.hits[2].n == 12);
    CHECK(res.hits[2].p == 1);
    CHECK(res.hits[2].q == -1);
    CHECK(res.hits[2].value == 144);
    CHECK(res.hits[2].root == 12);
}

TEST_CASE("n = 10 has no box solutions at all") {
    const auto res = run_search(SearchSpec{10, 10, 200, 200, 2});
    CHECK(res.hits.empty());
}

TEST_CASE("n = 9 has no box solutions") {
    const auto res = run_search(SearchSpec{9, 9, 100, 100, 1});
    CHECK(res.hits.empty());
}

TEST_CASE("n = 7 box finds the family members") {
    const auto res = run_search(SearchSpec{7, 7, 60, 60, 1});
    std::set<std::pair<long, long>> pairs;
    for (const auto& h : res.hits)
        pairs.emplace(h.p.get_si(), h.q.get_si());
    CHECK(pairs.count({2, -1}) == 1);
    CHECK(pairs.count({5, 21}) == 1);
    CHECK(pairs.count({1, 5}) == 1);
}

TEST_CASE("tiny box excludes everything") {
    const auto res = run_search(SearchSpec{8, 8, 1, 1, 1});
    CHECK(res.hits.empty());
    // only (1,-1) is scanned: (1,1) is degenerate
    CHECK(res.stats.pairs_scanned == 1);
    CHECK(res.stats.degenerate_skipped == 1);
}

TEST_CASE("partition covers the range exactly") {
    SearchSpec spec{8, 12, 100, 100, 4};
    const auto chunks = partition(spec);
    REQUIRE(chunks.size() == 4);
    long expect_lo = 1;
    for (const auto& c : chunks) {
        CHECK(c.lo == expect_lo);
        CHECK(c.hi >= c.lo);
        expect_lo = c.hi + 1;
    }
    CHECK(expect_lo == 101);

    spec.workers = 1;
    const auto one = partition(spec);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PRange{1, 100});

    // more workers than P values
    spec.workers = 64;
    spec.p_max = 10;
    const auto many = partition(spec);
    CHECK(many.size() == 10);
}

TEST_CASE("worker count does not change the result") {
    const SearchSpec base{8, 12, 80, 80, 1};
    const auto r1 = run_search(base);
    SearchSpec par = base;
    par.workers = 8;
    const auto r8 = run_search(par);
    CHECK(r1.hits == r8.hits);
    CHECK(r1.stats.pairs_scanned == r8.stats.pairs_scanned);
    CHECK(r1.stats.sieve_rejected == r8.stats.sieve_rejected);
    CHECK(r1.stats.exact_tests == r8.stats.exact_tests);
}

TEST_CASE("soundness: every hit recomputes exactly") {
    const auto res = run_search(SearchSpec{2, 12, 40, 40, 3});
    CHECK_FALSE(res.hits.empty());
    for (const auto& h : res.hits) {
        CHECK(h.root * h.root == h.value);
        CHECK(lucas_u(h.n, LucasParams(h.p, h.q)) == h.value);
    }
}

TEST_CASE("cross-validation: family members inside the box are found") {
    const long box = 50;
    const auto res = run_search(SearchSpec{2, 7, box, box, 2});
    std::set<std::tuple<unsigned long, long, long>> hits;
    for (const auto& h : res.hits)
        hits.emplace(h.n, h.p.get_si(), h.q.get_si());

    for (int n = 2; n <= 7; ++n) {
        const auto recs = generate_family(FamilyRequest{n, 12, 12});
        for (const auto& r : recs) {
            if (r.degenerate)
                continue;  // search skips degenerate pairs by design
            if (r.p < 1 || r.p > box || abs(r.q) > box)
                continue;  // outside the canonical search domain
            INFO("n=" << n << " (" << r.p << "," << r.q << ")");
            CHECK(hits.count({r.n, r.p.get_si(), r.q.get_si()}) == 1);
        }
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(run_search(SearchSpec{1, 12, 10, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_search(SearchSpec{8, 17, 10, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_search(SearchSpec{9, 8, 10, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_search(SearchSpec{8, 12, 0, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_search(SearchSpec{8, 12, 10, 10, 0}), std::invalid_argument);
}

TEST_CASE("stats are consistent") {
    const auto res = run_search(SearchSpec{8, 12, 30, 30, 1});
    CHECK(res.stats.pairs_scanned > 0);
    CHECK(res.stats.degenerate_skipped == 2);  // (1,1) and (2,1)
    // each scanned pair contributes n_max - n_min + 1 index tests
    const auto total = res.stats.negative_skipped + res.stats.sieve_rejected +
                       res.stats.exact_tests;
    CHECK(total == res.stats.pairs_scanned * 5);
}
