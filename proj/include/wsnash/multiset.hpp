#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace wsnash {

// Multiset over {0, .., n-1}: counts[i] is how often element i occurs.
struct Multiset {
    std::vector<std::uint64_t> counts;

    std::uint64_t size() const {
        std::uint64_t total = 0;
        for (std::uint64_t c : counts) total += c;
        return total;
    }
};

// Number of size-k multisets over n elements: C(n+k-1, k).
mpz_class multiset_count(std::size_t n, std::uint64_t k);

// Walks all counts vectors with sum k over n slots in lexicographic order,
// from (0,..,0,k) up to (k,0,..,0). Supports O(n*k) random access by rank so
// a scan can be partitioned across workers.
class MultisetEnumerator {
public:
    MultisetEnumerator(std::size_t n, std::uint64_t k);

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    Multiset current() const { return Multiset{counts_}; }

    // Moves to the lexicographic successor; false when already at the last.
    bool advance();

    // Repositions to the counts vector of the given rank in [0, multiset_count).
    void seek(const mpz_class& rank);

    // Rank of the current counts vector.
    mpz_class rank() const;

private:
    std::size_t n_;
    std::uint64_t k_;
    std::vector<std::uint64_t> counts_;
};

} // namespace wsnash
