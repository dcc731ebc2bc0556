#include <cstddef>
#include <cstdint>

#include <immintrin.h>

namespace wsnash::detail {

// Same contract as scalar_dot_rows: all values nonnegative, sums fit int64.
// Nonnegativity is what makes _mm256_mul_epi32 (a signed 32x32->64 multiply
// of the even lanes) exact here; odd lanes are shifted down first.
void avx2_dot_rows(const std::int32_t* rows, std::size_t row_count, std::size_t n,
                   const std::int32_t* vec, std::int64_t* out) {
    for (std::size_t r = 0; r < row_count; ++r) {
        const std::int32_t* row = rows + r * n;
        __m256i acc_even = _mm256_setzero_si256();
        __m256i acc_odd = _mm256_setzero_si256();
        std::size_t j = 0;
        for (; j + 8 <= n; j += 8) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vec + j));
            acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epi32(a, b));
            acc_odd = _mm256_add_epi64(
                acc_odd, _mm256_mul_epi32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32)));
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                           _mm256_add_epi64(acc_even, acc_odd));
        std::int64_t acc = lanes[0] + lanes[1] + lanes[2] + lanes[3];
        for (; j < n; ++j) acc += static_cast<std::int64_t>(row[j]) * vec[j];
        out[r] = acc;
    }
}

} // namespace wsnash::detail
