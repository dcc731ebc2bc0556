#include "wsnash/dot_kernels.hpp"

#include <stdexcept>

namespace wsnash {

namespace detail {

void scalar_dot_rows(const std::int32_t* rows, std::size_t row_count, std::size_t n,
                     const std::int32_t* vec, std::int64_t* out) {
    for (std::size_t r = 0; r < row_count; ++r) {
        const std::int32_t* row = rows + r * n;
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            acc += static_cast<std::int64_t>(row[j]) * vec[j];
        out[r] = acc;
    }
}

#if WSNASH_HAVE_AVX2_SOURCES
void avx2_dot_rows(const std::int32_t* rows, std::size_t row_count, std::size_t n,
                   const std::int32_t* vec, std::int64_t* out);
#endif

} // namespace detail

const DotKernel& scalar_dot_kernel() {
    static const DotKernel kernel{"scalar", detail::scalar_dot_rows};
    return kernel;
}

const DotKernel* avx2_dot_kernel() {
#if WSNASH_HAVE_AVX2_SOURCES
    static const bool supported = __builtin_cpu_supports("avx2");
    static const DotKernel kernel{"avx2", detail::avx2_dot_rows};
    return supported ? &kernel : nullptr;
#else
    return nullptr;
#endif
}

const DotKernel& select_dot_kernel(KernelChoice choice) {
    switch (choice) {
        case KernelChoice::Auto: {
            const DotKernel* avx2 = avx2_dot_kernel();
            return avx2 ? *avx2 : scalar_dot_kernel();
        }
        case KernelChoice::Scalar:
            return scalar_dot_kernel();
        case KernelChoice::Avx2: {
            const DotKernel* avx2 = avx2_dot_kernel();
            if (!avx2) throw std::invalid_argument("AVX2 kernel unavailable on this host");
            return *avx2;
        }
        case KernelChoice::Rational:
            break;
    }
    throw std::invalid_argument("no integer kernel for the rational path");
}

} // namespace wsnash
