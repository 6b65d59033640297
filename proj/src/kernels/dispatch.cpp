#include <cstdlib>
#include <string_view>
#include <vector>

#include "zetagb/kernels.hpp"

namespace zetagb::kernels {

const char* kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kScalar: return "scalar";
    case KernelKind::kAvx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool available =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return available;
#else
  return false;
#endif
}

KernelKind active_kernel() {
  static const KernelKind kind = [] {
    if (const char* env = std::getenv("ZETAGB_KERNEL")) {
      if (std::string_view(env) == "scalar") return KernelKind::kScalar;
    }
    return avx2_available() ? KernelKind::kAvx2 : KernelKind::kScalar;
  }();
  return kind;
}

Complex dirichlet_sum(KernelKind kind, std::span<const Real> log_n, Complex s) {
  if (kind == KernelKind::kAvx2 && avx2_available()) return dirichlet_sum_avx2(log_n, s);
  return dirichlet_sum_scalar(log_n, s);
}

std::span<const Real> log_table(std::size_t count) {
  static const std::vector<Real> table = [] {
    std::vector<Real> logs(kLogTableSize);
    for (std::size_t i = 0; i < kLogTableSize; ++i) logs[i] = std::log(static_cast<Real>(i + 1));
    return logs;
  }();
  if (count > table.size()) throw ParameterError("log table request exceeds kLogTableSize");
  return std::span<const Real>(table.data(), count);
}

}  // namespace zetagb::kernels
