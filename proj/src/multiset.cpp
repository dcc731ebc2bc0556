#include "wsnash/multiset.hpp"

#include <stdexcept>

namespace wsnash {

mpz_class multiset_count(std::size_t n, std::uint64_t k) {
    if (n == 0) throw std::invalid_argument("multiset_count needs n >= 1");
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), n - 1 + k, k);
    return result;
}

MultisetEnumerator::MultisetEnumerator(std::size_t n, std::uint64_t k) : n_(n), k_(k) {
    if (n == 0 || k == 0) throw std::invalid_argument("enumerator needs n, k >= 1");
    counts_.assign(n, 0);
    counts_[n - 1] = k; // rank 0
}

bool MultisetEnumerator::advance() {
    // Successor rule: find the rightmost slot before the last that still has
    // mass to its right, take one unit into it, and flush the remainder of
    // that mass to the last slot.
    std::uint64_t tail = counts_[n_ - 1];
    for (std::size_t pos = n_ - 1; pos-- > 0;) {
        if (tail > 0) {
            ++counts_[pos];
            for (std::size_t p = pos + 1; p < n_; ++p) counts_[p] = 0;
            counts_[n_ - 1] = tail - 1;
            return true;
        }
        tail += counts_[pos];
    }
    return false;
}

void MultisetEnumerator::seek(const mpz_class& rank) {
    if (rank < 0 || rank >= multiset_count(n_, k_))
        throw std::out_of_range("multiset rank out of range");
    mpz_class rest = rank;
    std::uint64_t remaining = k_;
    for (std::size_t pos = 0; pos + 1 < n_; ++pos) {
        std::uint64_t a = 0;
        for (;; ++a) {
            mpz_class block = multiset_count(n_ - pos - 1, remaining - a);
            if (rest < block) break;
            rest -= block;
        }
        counts_[pos] = a;
        remaining -= a;
    }
    counts_[n_ - 1] = remaining;
}

mpz_class MultisetEnumerator::rank() const {
    mpz_class result = 0;
    std::uint64_t remaining = k_;
    for (std::size_t pos = 0; pos + 1 < n_; ++pos) {
        for (std::uint64_t a = 0; a < counts_[pos]; ++a)
            result += multiset_count(n_ - pos - 1, remaining - a);
        remaining -= counts_[pos];
    }
    return result;
}

} // namespace wsnash
