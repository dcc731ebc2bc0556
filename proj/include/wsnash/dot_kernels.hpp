#pragma once

#include <cstddef>
#include <cstdint>

namespace wsnash {

// Which inner-product implementation the well-support scan should use.
// Auto picks the widest integer kernel the CPU offers; Rational bypasses the
// integer fast path entirely and re-derives everything with exact mpq
// arithmetic (the reference the other kernels are tested against).
enum class KernelChoice { Auto, Rational, Scalar, Avx2 };

// Batched integer dot products: out[r] = sum_j rows[r*n + j] * vec[j].
// Contract: all inputs are nonnegative and the caller guarantees every
// accumulated sum fits in int64 (the scan prescaler enforces this).
using DotRowsFn = void (*)(const std::int32_t* rows, std::size_t row_count, std::size_t n,
                           const std::int32_t* vec, std::int64_t* out);

struct DotKernel {
    const char* name;
    DotRowsFn fn;
};

const DotKernel& scalar_dot_kernel();

// nullptr when the build or the CPU lacks AVX2.
const DotKernel* avx2_dot_kernel();

// Resolves Auto/Scalar/Avx2; throws std::invalid_argument for Rational (no
// integer kernel exists for it) or when AVX2 is requested but unavailable.
const DotKernel& select_dot_kernel(KernelChoice choice);

} // namespace wsnash
