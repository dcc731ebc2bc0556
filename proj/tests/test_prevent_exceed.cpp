#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wsnash/game.hpp"
#include "wsnash/game_io.hpp"
#include "wsnash/oracle.hpp"
#include "wsnash/prevent_exceed.hpp"

using namespace wsnash;

namespace {

BimatrixGame from_text(const char* text) { return parse_game(text); }

const char* RPS = "symmetric 3\n1/2 0 1\n1 1/2 0\n0 1 1/2\n";
const char* ALL_ONES = "symmetric 2\n1 1\n1 1\n";
const char* COORDINATION = "bimatrix 2\n1 0\n0 1\n1 0\n0 1\n";
const char* NINE_SIX = "symmetric 2\n9/10 6/10\n6/10 9/10\n";

Rational half() { return make_rational(1, 2); }

} // namespace

TEST_CASE("build_pe lays out the documented constraint list") {
    BimatrixGame game = from_text(COORDINATION);
    LinearSystem system = build_pe(game, PeParams{half(), half()});
    CHECK(system.num_vars == 4);
    REQUIRE(system.constraints.size() == 6); // 2 equalities + 2 row + 2 col
    CHECK(system.nonneg);
    CHECK(system.constraints[0].relation == Relation::Equal);
    CHECK(system.constraints[1].relation == Relation::Equal);
    for (std::size_t k = 2; k < 6; ++k) {
        CHECK(system.constraints[k].relation == Relation::LessEq);
        CHECK(system.constraints[k].rhs == half());
    }
    // Row constraint i touches only y variables, with R's row as coefficients.
    CHECK(system.constraints[2].coeffs == std::vector<Rational>{0, 0, 1, 0});
    // Column constraint j touches only x variables, with C's column.
    CHECK(system.constraints[4].coeffs == std::vector<Rational>{1, 0, 0, 0});

    LinearSystem ones = build_pe(from_text(ALL_ONES), PeParams{half(), half()});
    bool found_all_ones_row = false;
    for (const LinearConstraint& c : ones.constraints)
        if (c.relation == Relation::LessEq && c.rhs == half() &&
            c.coeffs == std::vector<Rational>{0, 0, 1, 1})
            found_all_ones_row = true;
    CHECK(found_all_ones_row);
}

TEST_CASE("pe at caps 1 is feasible for any normalized game") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 20; ++iter) {
        BimatrixGame game = generate_game(GameKind::Uniform, 1 + rng() % 4, rng(), false);
        CHECK(solve_pe(game, PeParams{1, 1}).has_value());
    }
}

TEST_CASE("solve_pe on the named games") {
    // RPS at (1/2, 1/2): the row inequalities sum to 3/2 over any y, forcing
    // every response to exactly 1/2; R is nonsingular, so uniform/uniform is
    // the unique solution, not merely a valid one.
    auto rps = solve_pe(from_text(RPS), PeParams{half(), half()});
    REQUIRE(rps.has_value());
    CHECK(rps->row == MixedStrategy::uniform(3));
    CHECK(rps->col == MixedStrategy::uniform(3));
    CHECK(prevents_exceeding(from_text(RPS), *rps, half(), half()));

    CHECK_FALSE(solve_pe(from_text(ALL_ONES), PeParams{half(), half()}).has_value());

    auto coord = solve_pe(from_text(COORDINATION), PeParams{half(), half()});
    REQUIRE(coord.has_value());
    CHECK(coord->row == MixedStrategy::uniform(2)); // x_j <= 1/2 and sum 1 pin both
    CHECK(coord->col == MixedStrategy::uniform(2));
}

TEST_CASE("symmetric_pe on the named games") {
    auto rps = symmetric_pe(from_text(RPS), half());
    REQUIRE(rps.has_value());
    CHECK(*rps == MixedStrategy::uniform(3));

    CHECK_FALSE(symmetric_pe(from_text(ALL_ONES), half()).has_value());

    // Summing the two constraints of the 9/10-6/10 game gives
    // (3/2)(x1 + x2) <= 1, impossible on the simplex.
    CHECK_FALSE(symmetric_pe(from_text(NINE_SIX), half()).has_value());

    CHECK_THROWS_AS(symmetric_pe(from_text("bimatrix 2\n1 1\n0 0\n1 1\n0 0\n"), half()),
                    std::invalid_argument);
}

TEST_CASE("caps outside the unit interval are rejected") {
    BimatrixGame game = from_text(COORDINATION);
    CHECK_THROWS_AS(build_pe(game, PeParams{make_rational(3, 2), half()}), std::invalid_argument);
    CHECK_THROWS_AS(solve_pe(game, PeParams{half(), make_rational(-1, 10)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetric_pe(from_text(RPS), make_rational(2)), std::invalid_argument);
}

TEST_CASE("feasible solutions prevent exceeding and bound the wsne regret") {
    std::mt19937_64 rng(1234);
    int feasible = 0;
    for (int iter = 0; iter < 120; ++iter) {
        BimatrixGame game = generate_game(GameKind::Uniform, 1 + rng() % 3, rng(), false);
        PeParams params{make_rational(static_cast<long>(rng() % 5), 4),
                        make_rational(static_cast<long>(rng() % 5), 4)};
        auto profile = solve_pe(game, params);
        if (!profile) continue;
        ++feasible;
        CHECK(prevents_exceeding(game, *profile, params.v, params.u));
        CHECK(wsne_epsilon(game, *profile).epsilon_wsne <= std::max(params.v, params.u));
    }
    CHECK(feasible > 20);
}

TEST_CASE("one-sided and two-sided feasibility coincide on symmetric games") {
    std::mt19937_64 rng(5678);
    int one_sided_feasible = 0;
    for (int iter = 0; iter < 80; ++iter) {
        BimatrixGame game = generate_game(GameKind::Uniform, 2 + rng() % 2, rng(), true);
        Rational u = make_rational(static_cast<long>(rng() % 5), 4);
        bool one_sided = symmetric_pe(game, u).has_value();
        bool two_sided = solve_pe(game, PeParams{u, u}).has_value();
        CHECK(one_sided == two_sided);
        one_sided_feasible += one_sided;
    }
    CHECK(one_sided_feasible > 10);
}

TEST_CASE("pe is feasible at every oracle equilibrium's payoffs") {
    std::mt19937_64 rng(91);
    for (int iter = 0; iter < 25; ++iter) {
        BimatrixGame game = generate_game(GameKind::Uniform, 2 + rng() % 2, rng(), false);
        for (const NeRecord& record : support_enumeration_ne(game)) {
            auto profile = solve_pe(game, PeParams{record.row_value, record.col_value});
            CHECK(profile.has_value()); // the equilibrium itself is a witness
        }
    }
}
