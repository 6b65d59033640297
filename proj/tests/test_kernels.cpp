#include "doctest.h"
#include "oracles.hpp"

#include "zetagb/kernels.hpp"

#include <vector>

namespace k = zetagb::kernels;
using zetagb::Complex;

namespace {

// Plain reference: one std::pow per term.
Complex naive(std::size_t count, Complex s) {
  Complex sum = 0.0;
  for (std::size_t n = 1; n <= count; ++n) sum += std::pow(static_cast<double>(n), -s);
  return sum;
}

}  // namespace

TEST_CASE("log table") {
  const auto logs = k::log_table(1000);
  REQUIRE(logs.size() == 1000);
  CHECK(logs[0] == 0.0);
  for (std::size_t i = 0; i < logs.size(); ++i) CHECK(logs[i] == std::log(static_cast<double>(i + 1)));
  CHECK(k::log_table(k::kLogTableSize).size() == k::kLogTableSize);
}

TEST_CASE("scalar kernel matches std::pow") {
  oracle::Sampler rng(11);
  for (int i = 0; i < 50; ++i) {
    const Complex s(rng.uniform(-2, 3), rng.uniform(-100, 100));
    const std::size_t count = static_cast<std::size_t>(rng.integer(1, 400));
    const Complex ref = naive(count, s);
    const Complex got = k::dirichlet_sum_scalar(k::log_table(count), s);
    CHECK(std::abs(got - ref) <= 1e-12 * (1 + std::abs(ref)) * count);
  }
}

TEST_CASE("AVX2 kernel equals scalar kernel") {
  if (!k::avx2_available()) {
    MESSAGE("AVX2 not available, skipping");
    return;
  }
  oracle::Sampler rng(12);
  for (int i = 0; i < 300; ++i) {
    const Complex s(rng.uniform(-3, 4), rng.uniform(-500, 500));
    // odd and small lengths exercise the scalar tail
    const std::size_t count = static_cast<std::size_t>(i < 20 ? i : rng.integer(1, 4000));
    const auto logs = k::log_table(count);
    const Complex a = k::dirichlet_sum_scalar(logs, s);
    const Complex b = k::dirichlet_sum_avx2(logs, s);
    double scale = 0.0;
    for (double l : logs) scale += std::exp(-s.real() * l);
    INFO("s = " << s << " count = " << count);
    CHECK(std::abs(a - b) <= 4e-15 * (1 + scale) * std::sqrt(static_cast<double>(count + 1)) + 1e-300);
  }
}

TEST_CASE("dispatch") {
  const auto kind = k::active_kernel();
  CHECK((kind == k::KernelKind::kScalar || k::avx2_available()));
  CHECK(std::string(k::kernel_name(k::KernelKind::kScalar)) == "scalar");
  const auto logs = k::log_table(64);
  const Complex s(0.5, 14.0);
  CHECK(std::abs(k::dirichlet_sum(kind, logs, s) - k::dirichlet_sum_scalar(logs, s)) < 1e-12);
  CHECK(k::dirichlet_sum(k::KernelKind::kScalar, {}, s) == Complex(0.0));
}
