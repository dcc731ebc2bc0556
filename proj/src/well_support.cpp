#include "wsnash/well_support.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include <mpfr.h>

#include "wsnash/errors.hpp"

namespace wsnash {

mpz_class kappa_exact(const Rational& delta) {
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");
    // 2 ln(1/d)/d^2 for d = p/q equals (2q^2/p^2) * ln(q/p). ln(q/p) is
    // transcendental for rational q/p != 1 (Lindemann), so the product is
    // never an integer and some finite precision separates its ceiling.
    Rational scale = 2 / (delta * delta);
    Rational inv = 1 / delta;
    mpz_class lo_ceil, hi_ceil;
    for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
        mpfr_t lo, hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_q(lo, inv.get_mpq_t(), MPFR_RNDD);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_mul_q(lo, lo, scale.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, inv.get_mpq_t(), MPFR_RNDU);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_mul_q(hi, hi, scale.get_mpq_t(), MPFR_RNDU);
        mpfr_get_z(lo_ceil.get_mpz_t(), lo, MPFR_RNDU); // ceil of each endpoint
        mpfr_get_z(hi_ceil.get_mpz_t(), hi, MPFR_RNDU);
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (lo_ceil == hi_ceil) return lo_ceil;
    }
    throw std::logic_error("kappa interval failed to converge");
}

std::uint64_t kappa(const Rational& delta) {
    mpz_class k = kappa_exact(delta);
    if (!k.fits_ulong_p())
        throw BudgetError("kappa(delta) exceeds the addressable search space");
    return k.get_ui();
}

WsParams WsParams::make(const Rational& v, const Rational& u, const Rational& delta) {
    return WsParams{v, u, delta, wsnash::kappa(delta)};
}

MixedStrategy strategy_from_multiset(const Multiset& ms) {
    std::uint64_t k = ms.size();
    if (k == 0) throw std::invalid_argument("cannot build a strategy from an empty multiset");
    std::vector<Rational> weights;
    weights.reserve(ms.counts.size());
    for (std::uint64_t c : ms.counts)
        weights.push_back(make_rational(mpz_class(c), mpz_class(k)));
    return MixedStrategy(std::move(weights));
}

std::optional<StrategyProfile> check_ws(const BimatrixGame& game, const WsParams& params,
                                        const Multiset& I, const Multiset& J) {
    const std::size_t n = game.size();
    if (I.counts.size() != n || J.counts.size() != n)
        throw std::invalid_argument("multiset dimension does not match the game");
    if (I.size() != params.kappa || J.size() != params.kappa)
        throw std::invalid_argument("multiset size must equal kappa");

    StrategyProfile profile{strategy_from_multiset(I), strategy_from_multiset(J)};
    if (well_supports(game, profile, params.v - params.delta, params.u - params.delta))
        return profile;
    return std::nullopt;
}

namespace {

// Precomputed integer view of the scan: payoffs scaled by the common
// denominator D so every inequality becomes an int64 comparison.
struct IntScan {
    std::vector<std::int32_t> row_scaled;   // R*D, row-major
    std::vector<std::int32_t> col_scaled_t; // (C*D) transposed: row j holds C_{.j}*D
    std::int64_t row_threshold;             // ceil(kappa * D * (v - delta))
    std::int64_t col_threshold;             // ceil(kappa * D * (u - delta))
};

// Integer dot >= rational bound iff dot >= ceil(bound); |bound| <= kappa*D.
std::int64_t int_threshold(std::uint64_t kappa, const mpz_class& d, const Rational& bound) {
    Rational scaled = Rational(mpz_class(kappa)) * Rational(d) * bound;
    return static_cast<std::int64_t>(ceil_rational(scaled).get_si());
}

// The fast path needs every scaled payoff in int32 and every accumulated
// sum within int64; otherwise the scan falls back to exact rationals.
std::optional<IntScan> make_int_scan(const BimatrixGame& game, const WsParams& params) {
    if (!game.entries_within_unit()) return std::nullopt;
    if (params.kappa > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
        return std::nullopt;

    mpz_class d(1);
    auto widen = [&](const RationalMatrix& matrix) {
        for (const Rational& e : matrix.cells())
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den().get_mpz_t());
    };
    widen(game.row_payoffs());
    widen(game.col_payoffs());

    if (d > std::numeric_limits<std::int32_t>::max()) return std::nullopt;
    mpz_class sum_cap = d * mpz_class(params.kappa);
    if (sum_cap > (mpz_class(1) << 61)) return std::nullopt;

    const std::size_t n = game.size();
    IntScan scan;
    scan.row_scaled.resize(n * n);
    scan.col_scaled_t.resize(n * n);
    auto scaled = [&](const Rational& e) {
        mpz_class s = e.get_num() * (d / e.get_den());
        return static_cast<std::int32_t>(s.get_ui());
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scan.row_scaled[i * n + j] = scaled(game.row_payoffs().at(i, j));
            scan.col_scaled_t[j * n + i] = scaled(game.col_payoffs().at(i, j));
        }
    }
    scan.row_threshold = int_threshold(params.kappa, d, params.v - params.delta);
    scan.col_threshold = int_threshold(params.kappa, d, params.u - params.delta);
    return scan;
}

// Walks pair ranks [lo, hi) in order, keeping the (I, J) enumerators in
// step, and lowers `best` to the first hit. Blocks scan independently;
// since every block scans ascending, the minimum over blocks is the global
// lexicographic first hit regardless of worker count.
template <typename OnNewI, typename CheckPair>
void scan_block(std::size_t n, std::uint64_t kappa, std::uint64_t m, std::uint64_t lo,
                std::uint64_t hi, std::atomic<std::uint64_t>& best, OnNewI&& on_new_i,
                CheckPair&& check_pair) {
    if (lo >= hi) return;
    MultisetEnumerator ienum(n, kappa);
    MultisetEnumerator jenum(n, kappa);
    std::uint64_t j_rank = lo % m;
    ienum.seek(mpz_class(lo / m));
    jenum.seek(mpz_class(j_rank));
    on_new_i(ienum.counts());
    for (std::uint64_t g = lo; g < hi; ++g) {
        if ((g & 0x3ff) == 0 && best.load(std::memory_order_relaxed) < g)
            return; // an earlier pair already hit; nothing here can win
        if (check_pair(jenum.counts())) {
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (g < cur &&
                   !best.compare_exchange_weak(cur, g, std::memory_order_relaxed)) {
            }
            return;
        }
        if (g + 1 == hi) break;
        if (++j_rank == m) {
            j_rank = 0;
            jenum.seek(0);
            ienum.advance();
            on_new_i(ienum.counts());
        } else {
            jenum.advance();
        }
    }
}

void scan_block_int(const BimatrixGame& game, const WsParams& params, const IntScan& scan,
                    const DotKernel& kernel, std::uint64_t m, std::uint64_t lo,
                    std::uint64_t hi, std::atomic<std::uint64_t>& best) {
    const std::size_t n = game.size();
    std::vector<std::int32_t> cnt_i(n), cnt_j(n);
    std::vector<std::int64_t> col_values(n), row_values(n);
    std::vector<std::uint8_t> col_ok(n);
    std::vector<std::int32_t> supp_rows(n * n);
    std::size_t supp_count = 0;

    auto on_new_i = [&](const std::vector<std::uint64_t>& counts) {
        for (std::size_t i = 0; i < n; ++i) cnt_i[i] = static_cast<std::int32_t>(counts[i]);
        kernel.fn(scan.col_scaled_t.data(), n, n, cnt_i.data(), col_values.data());
        for (std::size_t j = 0; j < n; ++j)
            col_ok[j] = col_values[j] >= scan.col_threshold ? 1 : 0;
        supp_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[i] == 0) continue;
            const std::int32_t* row = scan.row_scaled.data() + i * n;
            std::copy(row, row + n, supp_rows.begin() + supp_count * n);
            ++supp_count;
        }
    };

    auto check_pair = [&](const std::vector<std::uint64_t>& counts) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j) {
            cnt_j[j] = static_cast<std::int32_t>(counts[j]);
            if (cnt_j[j] != 0 && !col_ok[j]) ok = false;
        }
        if (!ok) return false;
        kernel.fn(supp_rows.data(), supp_count, n, cnt_j.data(), row_values.data());
        for (std::size_t r = 0; r < supp_count; ++r)
            if (row_values[r] < scan.row_threshold) return false;
        return true;
    };

    scan_block(n, params.kappa, m, lo, hi, best, on_new_i, check_pair);
}

void scan_block_rational(const BimatrixGame& game, const WsParams& params, std::uint64_t m,
                         std::uint64_t lo, std::uint64_t hi,
                         std::atomic<std::uint64_t>& best) {
    const std::size_t n = game.size();
    // Compare kappa-scaled sums so the inner loop never divides.
    Rational row_threshold = Rational(mpz_class(params.kappa)) * (params.v - params.delta);
    Rational col_threshold = Rational(mpz_class(params.kappa)) * (params.u - params.delta);
    std::vector<std::uint8_t> col_ok(n);
    std::vector<std::size_t> supp_i;
    Rational acc;

    auto on_new_i = [&](const std::vector<std::uint64_t>& counts) {
        for (std::size_t j = 0; j < n; ++j) {
            acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (counts[i] != 0)
                    acc += game.col_payoffs().at(i, j) * mpz_class(counts[i]);
            col_ok[j] = acc >= col_threshold ? 1 : 0;
        }
        supp_i.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (counts[i] != 0) supp_i.push_back(i);
    };

    auto check_pair = [&](const std::vector<std::uint64_t>& counts) {
        for (std::size_t j = 0; j < n; ++j)
            if (counts[j] != 0 && !col_ok[j]) return false;
        for (std::size_t i : supp_i) {
            acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (counts[j] != 0)
                    acc += game.row_payoffs().at(i, j) * mpz_class(counts[j]);
            if (acc < row_threshold) return false;
        }
        return true;
    };

    scan_block(n, params.kappa, m, lo, hi, best, on_new_i, check_pair);
}

} // namespace

WsSearchResult search_ws(const BimatrixGame& game, const WsParams& params,
                         const SearchOptions& options) {
    const std::size_t n = game.size();
    mpz_class m = multiset_count(n, params.kappa);
    WsSearchResult result;
    result.total_pairs = m * m;

    if (result.total_pairs > mpz_class(options.pair_budget))
        throw BudgetError("pair space " + result.total_pairs.get_str() +
                          " exceeds the budget of " + std::to_string(options.pair_budget) +
                          " pairs");
    const std::uint64_t total = result.total_pairs.get_ui();
    const std::uint64_t m_u = m.get_ui();

    std::optional<IntScan> int_scan;
    const DotKernel* kernel = nullptr;
    if (options.kernel != KernelChoice::Rational) {
        int_scan = make_int_scan(game, params);
        if (int_scan) {
            kernel = &select_dot_kernel(options.kernel);
        } else if (options.kernel != KernelChoice::Auto) {
            throw std::invalid_argument(
                "game is not eligible for the integer fast path; use the rational kernel");
        }
    }
    result.kernel_name = kernel ? kernel->name : "rational";

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    auto run_block = [&](std::uint64_t lo, std::uint64_t hi) {
        if (kernel)
            scan_block_int(game, params, *int_scan, *kernel, m_u, lo, hi, best);
        else
            scan_block_rational(game, params, m_u, lo, hi, best);
    };

    std::uint64_t workers = options.jobs == 0 ? 1 : options.jobs;
    if (workers > total) workers = total;
    if (workers <= 1) {
        run_block(0, total);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        std::uint64_t chunk = total / workers;
        std::uint64_t extra = total % workers;
        std::uint64_t lo = 0;
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
            threads.emplace_back([&, w, lo, hi] {
                try {
                    run_block(lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (std::thread& t : threads) t.join();
        for (std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::uint64_t hit = best.load();
    if (hit == std::numeric_limits<std::uint64_t>::max()) {
        result.exhausted = true;
        result.pairs_examined = total;
        return result;
    }

    MultisetEnumerator ienum(n, params.kappa);
    MultisetEnumerator jenum(n, params.kappa);
    ienum.seek(mpz_class(hit / m_u));
    jenum.seek(mpz_class(hit % m_u));
    result.row_multiset = ienum.current();
    result.col_multiset = jenum.current();
    result.profile = check_ws(game, params, result.row_multiset, result.col_multiset);
    if (!result.profile)
        throw GuaranteeError("scan hit failed the exact well-support re-check");
    result.pairs_examined = hit + 1;
    return result;
}

} // namespace wsnash
