#pragma once

#include <cstddef>
#include <span>

#include "zetagb/types.hpp"

// Inner loop of every evaluation: the Dirichlet partial sum
//   sum_i exp(-s * log_n[i])
// over a table of real logarithms. A scalar reference kernel and an AVX2
// kernel are provided; the AVX2 one is picked at runtime when the CPU has
// AVX2+FMA. Both must agree to rounding (see tests/test_kernels.cpp).
namespace zetagb::kernels {

enum class KernelKind { kScalar, kAvx2 };

const char* kernel_name(KernelKind kind);

/// True when the AVX2 kernel was compiled in and the CPU supports AVX2+FMA.
bool avx2_available();

/// Kernel used by the evaluators. Chosen once per process: AVX2 when
/// available, unless ZETAGB_KERNEL=scalar is set in the environment.
KernelKind active_kernel();

Complex dirichlet_sum_scalar(std::span<const Real> log_n, Complex s);

/// Precondition: avx2_available().
Complex dirichlet_sum_avx2(std::span<const Real> log_n, Complex s);

Complex dirichlet_sum(KernelKind kind, std::span<const Real> log_n, Complex s);

/// Size of the shared logarithm table (entries ln 1 .. ln kLogTableSize).
inline constexpr std::size_t kLogTableSize = std::size_t{1} << 17;

/// ln n for n = 1..count, count <= kLogTableSize. Immutable after first use.
std::span<const Real> log_table(std::size_t count);

}  // namespace zetagb::kernels
