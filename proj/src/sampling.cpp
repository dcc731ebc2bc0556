#include "wsnash/sampling.hpp"

#include <stdexcept>
#include <vector>

#include <mpfr.h>

#include "wsnash/multiset.hpp"
#include "wsnash/well_support.hpp"

namespace wsnash {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

using u128 = unsigned __int128;

// floor(value * 2^64) for value in [0, 1]; needs 65 bits at the top end.
u128 fixed_point_64(const Rational& value) {
    mpz_class scaled = (value.get_num() << 64) / value.get_den();
    mpz_class hi = scaled >> 64;
    mpz_class lo = scaled & ((mpz_class(1) << 64) - 1);
    return (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
}

} // namespace

MixedStrategy sample_k_uniform(const MixedStrategy& base, std::uint64_t k,
                               std::mt19937_64& rng) {
    if (k == 0) throw std::invalid_argument("sample size must be positive");
    const std::size_t n = base.dimension();

    // Cumulative thresholds t_i = floor(cum_i * 2^64); index i is drawn when
    // the 64-bit variate lands in [t_{i-1}, t_i), an interval of width
    // within one part in 2^64 of weight_i and empty when weight_i = 0.
    std::vector<u128> thresholds(n);
    Rational cum(0);
    for (std::size_t i = 0; i < n; ++i) {
        cum += base.weight(i);
        thresholds[i] = fixed_point_64(cum);
    }

    Multiset draws;
    draws.counts.assign(n, 0);
    for (std::uint64_t t = 0; t < k; ++t) {
        u128 r = rng();
        std::size_t i = 0;
        while (r >= thresholds[i]) ++i;
        ++draws.counts[i];
    }
    return strategy_from_multiset(draws);
}

namespace {

constexpr mpfr_prec_t kBoundPrecision = 256;

double finish(mpfr_t x) {
    double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

} // namespace

double hoeffding_tail(const Rational& delta, std::uint64_t k) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    if (k == 0) throw std::invalid_argument("k must be positive");
    Rational exponent = -2 * delta * delta * mpz_class(k);
    mpfr_t x;
    mpfr_init2(x, kBoundPrecision);
    mpfr_set_q(x, exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_exp(x, x, MPFR_RNDN);
    return finish(x);
}

double union_bound_value(const Rational& delta) {
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");
    Rational inv = 1 / delta;
    Rational factor = 2 * delta * delta;
    mpfr_t x;
    mpfr_init2(x, kBoundPrecision);
    mpfr_set_q(x, inv.get_mpq_t(), MPFR_RNDN);
    mpfr_log(x, x, MPFR_RNDN);
    mpfr_mul_q(x, x, factor.get_mpq_t(), MPFR_RNDN);
    return finish(x);
}

double union_bound_value(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("delta must lie in (0,1)");
    mpfr_t x, f;
    mpfr_init2(x, kBoundPrecision);
    mpfr_init2(f, kBoundPrecision);
    mpfr_set_d(x, delta, MPFR_RNDN); // exact: doubles embed in 256 bits
    mpfr_log(f, x, MPFR_RNDN);
    mpfr_neg(f, f, MPFR_RNDN);       // ln(1/delta)
    mpfr_mul(f, f, x, MPFR_RNDN);
    mpfr_mul(f, f, x, MPFR_RNDN);
    mpfr_mul_ui(f, f, 2, MPFR_RNDN);
    mpfr_clear(x);
    return finish(f);
}

SampleOutcome demonstrate_existence(const BimatrixGame& game, const StrategyProfile& ne,
                                    const SampleConfig& config) {
    if (config.trials == 0) throw std::invalid_argument("trials must be positive");
    if (!game.entries_within_unit())
        throw std::invalid_argument("demonstrate_existence requires payoffs in [0,1]");
    RegretReport report = wsne_epsilon(game, ne);
    if (report.epsilon_ne != 0)
        throw std::invalid_argument("supplied profile is not an exact Nash equilibrium");

    SampleOutcome outcome;
    outcome.trials = config.trials;
    outcome.kappa = kappa(config.delta);
    outcome.row_value = report.row_payoff;
    outcome.col_value = report.col_payoff;

    Rational row_floor = outcome.row_value - config.delta;
    Rational col_floor = outcome.col_value - config.delta;

    std::uint64_t stream = config.seed;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        std::mt19937_64 rng(splitmix64(stream));
        StrategyProfile sampled{sample_k_uniform(ne.row, outcome.kappa, rng),
                                sample_k_uniform(ne.col, outcome.kappa, rng)};
        if (well_supports(game, sampled, row_floor, col_floor)) {
            ++outcome.successes;
            if (!outcome.first_success) outcome.first_success = std::move(sampled);
        }
    }

    outcome.empirical_failure_rate =
        make_rational(mpz_class(config.trials - outcome.successes), mpz_class(config.trials));
    outcome.per_side_bound =
        static_cast<double>(outcome.kappa) * hoeffding_tail(config.delta, outcome.kappa);
    outcome.union_bound = union_bound_value(config.delta);
    return outcome;
}

} // namespace wsnash
