#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "wsnash/errors.hpp"
#include "wsnash/game.hpp"
#include "wsnash/game_io.hpp"
#include "wsnash/well_support.hpp"

using namespace wsnash;

namespace {

const char* ALL_ONES = "symmetric 2\n1 1\n1 1\n";
const char* ALL_ZEROS = "symmetric 2\n0 0\n0 0\n";
const char* NINE_SIX = "symmetric 2\n9/10 6/10\n6/10 9/10\n";
const char* RPS = "symmetric 3\n1/2 0 1\n1 1/2 0\n0 1 1/2\n";

Rational half() { return make_rational(1, 2); }

Multiset ms(std::vector<std::uint64_t> counts) { return Multiset{std::move(counts)}; }

} // namespace

TEST_CASE("kappa pins the ceiling of 2 ln(1/delta)/delta^2") {
    CHECK(kappa(make_rational(1, 2)) == 6);
    CHECK(kappa(make_rational(1, 10)) == 461);
    CHECK(kappa(make_rational(9, 20)) == 8);
    CHECK(kappa(make_rational(2, 5)) == 12);
    CHECK(kappa(make_rational(1, 5)) == 81);
    CHECK(kappa(make_rational(1, 4)) == 45);
    CHECK(kappa(make_rational(3, 4)) == 2);
    CHECK(kappa(make_rational(99, 100)) == 1);
    CHECK(kappa(make_rational(1, 100)) == 92104);

    CHECK_THROWS_AS(kappa(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(kappa(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(kappa(make_rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(kappa(make_rational(3, 2)), std::invalid_argument);

    // Nonincreasing in delta, never below 1.
    std::uint64_t prev = kappa(make_rational(1, 100));
    for (long i = 2; i <= 99; ++i) {
        std::uint64_t k = kappa(make_rational(i, 100));
        CHECK(k >= 1);
        CHECK(k <= prev);
        prev = k;
    }

    // Tiny delta overflows the 64-bit narrowing but not the exact form.
    Rational tiny = make_rational(1, 10000000000L);
    CHECK(kappa_exact(tiny) > mpz_class("4000000000000000000000"));
    CHECK_THROWS_AS(kappa(tiny), BudgetError);
}

TEST_CASE("strategy_from_multiset") {
    MixedStrategy s = strategy_from_multiset(ms({2, 1, 0}));
    CHECK(s.weights() == std::vector<Rational>{make_rational(2, 3), make_rational(1, 3), 0});
    CHECK(strategy_from_multiset(ms({0, 0, 6})) == MixedStrategy::point_mass(3, 2));
    CHECK_THROWS_AS(strategy_from_multiset(ms({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("check_ws decides the pinned system") {
    WsParams loose = WsParams::make(half(), half(), half()); // kappa = 6
    BimatrixGame ones = parse_game(ALL_ONES);
    auto hit = check_ws(ones, loose, ms({2, 4}), ms({6, 0}));
    REQUIRE(hit.has_value());
    CHECK(wsne_epsilon(ones, *hit).epsilon_wsne == 0);
    CHECK(hit->row.weight(0) == make_rational(1, 3));

    WsParams tight = WsParams::make(half(), half(), make_rational(1, 10)); // kappa = 461
    BimatrixGame zeros = parse_game(ALL_ZEROS);
    CHECK_FALSE(check_ws(zeros, tight, ms({461, 0}), ms({461, 0})).has_value());
    CHECK_FALSE(check_ws(zeros, tight, ms({0, 461}), ms({230, 231})).has_value());

    WsParams mid = WsParams::make(half(), half(), make_rational(2, 5)); // kappa = 12
    BimatrixGame ninesix = parse_game(NINE_SIX);
    auto e1 = check_ws(ninesix, mid, ms({12, 0}), ms({12, 0}));
    REQUIRE(e1.has_value());
    CHECK(e1->row == MixedStrategy::point_mass(2, 0));
    CHECK(e1->col == MixedStrategy::point_mass(2, 0));
    CHECK(well_supports(ninesix, *e1, half() - mid.delta, half() - mid.delta));

    CHECK_THROWS_AS(check_ws(ones, loose, ms({2, 3}), ms({6, 0})), std::invalid_argument);
}

TEST_CASE("check_ws successes well support the shifted thresholds") {
    std::mt19937_64 rng(11);
    int hits = 0;
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = 1 + rng() % 3;
        BimatrixGame game = generate_game(GameKind::Uniform, n, rng(), false);
        WsParams params = WsParams::make(make_rational(static_cast<long>(rng() % 3), 4),
                                         make_rational(static_cast<long>(rng() % 3), 4),
                                         make_rational(1, 2));
        MultisetEnumerator items(n, params.kappa);
        items.seek(mpz_class(static_cast<unsigned long>(rng() % 7)) %
                   multiset_count(n, params.kappa));
        Multiset i = items.current();
        items.seek(mpz_class(static_cast<unsigned long>(rng() % 11)) %
                   multiset_count(n, params.kappa));
        Multiset j = items.current();
        auto profile = check_ws(game, params, i, j);
        if (!profile) continue;
        ++hits;
        CHECK(well_supports(game, *profile, params.v - params.delta, params.u - params.delta));
        CHECK(wsne_epsilon(game, *profile).epsilon_wsne <=
              1 - std::min(params.v - params.delta, params.u - params.delta));
        // kappa-uniform: every weight is a multiple of 1/kappa.
        for (const Rational& w : profile->row.weights()) {
            Rational scaled = w * static_cast<unsigned long>(params.kappa);
            CHECK(scaled.get_den() == 1);
        }
    }
    CHECK(hits > 30);
}

TEST_CASE("multiset enumeration is lexicographic and complete") {
    MultisetEnumerator two(2, 2);
    CHECK(two.counts() == std::vector<std::uint64_t>{0, 2});
    REQUIRE(two.advance());
    CHECK(two.counts() == std::vector<std::uint64_t>{1, 1});
    REQUIRE(two.advance());
    CHECK(two.counts() == std::vector<std::uint64_t>{2, 0});
    CHECK_FALSE(two.advance());

    CHECK(multiset_count(3, 6) == 28);
    CHECK(multiset_count(2, 2) == 3);
    CHECK(multiset_count(1, 5) == 1);

    MultisetEnumerator solo(1, 5);
    CHECK(solo.counts() == std::vector<std::uint64_t>{5});
    CHECK_FALSE(solo.advance());

    for (std::size_t n = 1; n <= 6; ++n)
        for (std::uint64_t k = 1; k <= 8; ++k) {
            MultisetEnumerator e(n, k);
            std::set<std::vector<std::uint64_t>> seen;
            std::vector<std::uint64_t> prev;
            mpz_class count = 0;
            do {
                CHECK(e.current().size() == k);
                if (!prev.empty()) CHECK(prev < e.counts());
                prev = e.counts();
                seen.insert(prev);
                ++count;
            } while (e.advance());
            CHECK(count == multiset_count(n, k));
            CHECK(mpz_class(seen.size()) == count);
        }
}

TEST_CASE("seek and rank are inverse bijections") {
    MultisetEnumerator reference(4, 5);
    mpz_class total = multiset_count(4, 5);
    for (mpz_class r = 0; r < total; ++r) {
        MultisetEnumerator e(4, 5);
        e.seek(r);
        CHECK(e.rank() == r);
        CHECK(e.counts() == reference.counts());
        reference.advance();
    }

    // Resuming mid-stream matches a fresh walk from that index.
    MultisetEnumerator walked(5, 7);
    for (int step = 0; step < 100; ++step) REQUIRE(walked.advance());
    MultisetEnumerator sought(5, 7);
    sought.seek(100);
    CHECK(sought.counts() == walked.counts());
}

TEST_CASE("search finds the first pair in global order") {
    BimatrixGame ones = parse_game(ALL_ONES);
    WsParams loose = WsParams::make(half(), half(), half());
    WsSearchResult r = search_ws(ones, loose);
    REQUIRE(r.profile.has_value());
    CHECK(r.pairs_examined == 1);
    CHECK(r.row_multiset.counts == std::vector<std::uint64_t>{0, 6});
    CHECK(r.profile->row == MixedStrategy::point_mass(2, 1));
    CHECK_FALSE(r.exhausted);

    BimatrixGame rps = parse_game(RPS);
    WsSearchResult rr = search_ws(rps, loose);
    REQUIRE(rr.profile.has_value());
    CHECK(rr.pairs_examined == 1); // thresholds drop to 0, first pair hits
    CHECK(rr.total_pairs == 784);  // 28^2

    BimatrixGame ninesix = parse_game(NINE_SIX);
    WsSearchResult rn = search_ws(ninesix, WsParams::make(half(), half(), make_rational(2, 5)));
    REQUIRE(rn.profile.has_value());
    CHECK(rn.pairs_examined == 1);
    CHECK(rn.profile->row == MixedStrategy::point_mass(2, 1));
    CHECK(rn.total_pairs == 169);
}

TEST_CASE("search reports exhaustion after scanning everything") {
    BimatrixGame zeros = parse_game(ALL_ZEROS);
    WsParams params = WsParams::make(half(), half(), make_rational(1, 10));
    WsSearchResult r = search_ws(zeros, params);
    CHECK_FALSE(r.profile.has_value());
    CHECK(r.exhausted);
    CHECK(r.total_pairs == 213444); // 462^2
    CHECK(r.pairs_examined == 213444);
}

// R = [[1,0],[0,0]] at v = u = 1/2, delta = 1/4 (kappa = 45): any mass on
// the second strategy breaks one side, so the only solution is x = y = e1,
// which is the lexicographically last of the 46^2 pairs.
TEST_CASE("search scans to the last pair when the hit is maximal") {
    BimatrixGame game = parse_game("symmetric 2\n1 0\n0 0\n");
    WsParams params = WsParams::make(half(), half(), make_rational(1, 4));
    for (unsigned jobs : {1u, 4u}) {
        SearchOptions options;
        options.jobs = jobs;
        WsSearchResult r = search_ws(game, params, options);
        REQUIRE(r.profile.has_value());
        CHECK(r.row_multiset.counts == std::vector<std::uint64_t>{45, 0});
        CHECK(r.col_multiset.counts == std::vector<std::uint64_t>{45, 0});
        CHECK(r.pairs_examined == 2116); // hit at global rank 2115
        CHECK(r.total_pairs == 2116);
    }
}

TEST_CASE("budget guard aborts before scanning") {
    BimatrixGame zeros = parse_game(ALL_ZEROS);
    WsParams params = WsParams::make(half(), half(), make_rational(1, 10));
    SearchOptions tight;
    tight.pair_budget = 1000;
    CHECK_THROWS_AS(search_ws(zeros, params, tight), BudgetError);

    // n = 3 at delta = 1/10 exceeds even the default budget.
    BimatrixGame rps = parse_game(RPS);
    CHECK_THROWS_AS(search_ws(rps, WsParams::make(half(), half(), make_rational(1, 10))),
                    BudgetError);
}

TEST_CASE("integer and rational scans agree everywhere") {
    std::vector<std::pair<BimatrixGame, WsParams>> cases;
    cases.emplace_back(parse_game("symmetric 2\n1 0\n0 0\n"),
                       WsParams::make(half(), half(), make_rational(1, 4)));
    cases.emplace_back(parse_game(NINE_SIX), WsParams::make(half(), half(), make_rational(2, 5)));
    cases.emplace_back(parse_game(ALL_ZEROS), WsParams::make(half(), half(), half()));
    std::mt19937_64 rng(20);
    for (int iter = 0; iter < 12; ++iter)
        cases.emplace_back(generate_game(GameKind::Uniform, 1 + rng() % 3, rng(), iter % 2),
                           WsParams::make(make_rational(static_cast<long>(1 + rng() % 3), 4),
                                          make_rational(static_cast<long>(1 + rng() % 3), 4),
                                          make_rational(1, 4)));

    for (const auto& [game, params] : cases) {
        SearchOptions rational, scalar;
        rational.kernel = KernelChoice::Rational;
        scalar.kernel = KernelChoice::Scalar;
        WsSearchResult a = search_ws(game, params, rational);
        WsSearchResult b = search_ws(game, params, scalar);
        CHECK(a.kernel_name == std::string("rational"));
        CHECK(b.kernel_name == std::string("scalar"));
        CHECK(a.profile.has_value() == b.profile.has_value());
        CHECK(a.pairs_examined == b.pairs_examined);
        CHECK(a.exhausted == b.exhausted);
        if (a.profile) {
            CHECK(*a.profile == *b.profile);
            CHECK(a.row_multiset.counts == b.row_multiset.counts);
            CHECK(a.col_multiset.counts == b.col_multiset.counts);
        }
        if (avx2_dot_kernel()) {
            SearchOptions vec;
            vec.kernel = KernelChoice::Avx2;
            WsSearchResult c = search_ws(game, params, vec);
            CHECK(c.kernel_name == std::string("avx2"));
            CHECK(a.profile.has_value() == c.profile.has_value());
            CHECK(a.pairs_examined == c.pairs_examined);
            if (a.profile) CHECK(*a.profile == *c.profile);
        }
    }
}

TEST_CASE("threshold rounding is exact at the boundary") {
    // kappa(1/4) = 45; the scaled threshold is ceil(45 * 4 * 1/4) = 45.
    // An entry of exactly 1/4 meets v - delta = 1/4; 6/25 misses it.
    WsParams params = WsParams::make(half(), half(), make_rational(1, 4));
    for (KernelChoice choice : {KernelChoice::Rational, KernelChoice::Scalar}) {
        SearchOptions options;
        options.kernel = choice;
        WsSearchResult at = search_ws(parse_game("symmetric 1\n1/4\n"), params, options);
        CHECK(at.profile.has_value());
        WsSearchResult below = search_ws(parse_game("symmetric 1\n6/25\n"), params, options);
        CHECK_FALSE(below.profile.has_value());
        CHECK(below.exhausted);
        CHECK(below.total_pairs == 1);
    }
}

TEST_CASE("huge denominators fall back to the rational scan") {
    // lcm(3, 2147483647) overflows int32, so the integer fast path must bow out.
    BimatrixGame game = parse_game("symmetric 2\n1/3 1/2147483647\n2/3 1\n");
    WsParams params = WsParams::make(half(), half(), half());
    WsSearchResult r = search_ws(game, params);
    CHECK(r.kernel_name == std::string("rational"));
    REQUIRE(r.profile.has_value()); // thresholds are 0, first pair hits

    SearchOptions forced;
    forced.kernel = KernelChoice::Scalar;
    CHECK_THROWS_AS(search_ws(game, params, forced), std::invalid_argument);
}

TEST_CASE("ws params validation") {
    CHECK_THROWS_AS(WsParams::make(half(), half(), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(WsParams::make(half(), half(), Rational(1)), std::invalid_argument);
    WsParams p = WsParams::make(half(), half(), make_rational(9, 20));
    CHECK(p.kappa == 8);
}
