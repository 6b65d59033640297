#include "doctest.h"
#include "oracles.hpp"

#include "zetagb/kernels.hpp"
#include "zetagb/zeta.hpp"

#include <numbers>

using namespace zetagb;

namespace {

Complex Z(ComplexPoint s, int N, int nu) { return zeta_gb(s, EvalParams{N, nu}).value; }

Complex real_pow(int N, Complex w) { return std::exp(w * std::log(static_cast<double>(N))); }

// Rounding budget for a sum of terms of size up to N^{1 - sigma}: for
// sigma < 0 cancellation leaves absolute errors far above |zeta|.
double rounding(double sigma, int N) {
  double scale = std::pow(static_cast<double>(N), 1.0 - sigma);
  for (int n = 1; n < N; ++n) scale += std::pow(static_cast<double>(n), -sigma);
  return 64 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

TEST_CASE("classical values") {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6;
  CHECK(std::abs(zeta_gb({2, 0}, 1e-12).value - pi2_6) < 1e-11);
  CHECK(std::abs(Z({0, 0}, 50, 10) + 0.5) < 1e-10);
  CHECK(std::abs(Z({-1, 0}, 50, 10) + 1.0 / 12) < 1e-9);
  CHECK(std::abs(Z({4, 0}, 50, 10) - std::pow(std::numbers::pi, 4) / 90) < 1e-13);
  CHECK(std::abs(Z({-2, 0}, 50, 10)) < rounding(-2, 50));
  CHECK(std::abs(Z({-3, 0}, 50, 10) - 1.0 / 120) < rounding(-3, 50));
}

TEST_CASE("agrees with the independent Euler-Maclaurin oracle") {
  oracle::Sampler rng(3);
  for (int i = 0; i < 200; ++i) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(-100, 100)};
    if (std::abs(s.value() - 1.0) < 0.01) continue;
    const auto r = zeta_gb(s, 1e-11);
    const Complex ref = oracle::em_zeta(s.value());
    INFO("s = " << s.value());
    const double noise = rounding(s.re, r.params_used.cutoff_N) + rounding(s.re, 200);
    CHECK(std::abs(r.value - ref) <= r.remainder_bound + noise + 1e-12 * std::abs(ref));
  }
}

TEST_CASE("conjugate symmetry") {
  oracle::Sampler rng(4);
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(0.1, 80)};
    const EvalParams p = auto_params(s, 1e-10);
    const Complex a = zeta_gb(s, p).value;
    const Complex b = zeta_gb(s.conj(), p).value;
    CHECK(std::abs(a - std::conj(b)) <= 1e-12 * (1 + std::abs(a)));
  }
}

TEST_CASE("abbreviated tail reassembles Z") {
  oracle::Sampler rng(5);
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(-50, 50)};
    const EvalParams p{rng.integer(2, 120), rng.integer(1, 20)};
    const auto [r, rb] = em_tail(s, p);
    const Complex z = s.value();
    const Complex assembled = dirichlet_partial_sum(s, p.cutoff_N) + real_pow(p.cutoff_N, 1.0 - z) / (z - 1.0) + z * r;
    const Complex direct = Z(s, p.cutoff_N, p.tail_order_nu);
    CHECK(std::abs(assembled - direct) <= 1e-11 * (1 + std::abs(direct)));
    CHECK(rb == doctest::Approx(remainder_bound(s, p.cutoff_N, p.tail_order_nu) / std::abs(z)));
  }
  CHECK_THROWS_AS(em_tail({0, 0}, EvalParams{10, 2}), DomainError);
}

TEST_CASE("remainder bound covers the actual error") {
  oracle::Sampler rng(6);
  for (int i = 0; i < 200; ++i) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(-40, 40)};
    if (std::abs(s.value() - 1.0) < 0.01) continue;
    const EvalParams p{rng.integer(10, 60), rng.integer(2, 8)};
    const auto r = zeta_gb(s, p);
    const Complex ref = oracle::em_zeta(s.value());
    const double noise = rounding(s.re, p.cutoff_N) + rounding(s.re, 200);
    CHECK(std::abs(r.value - ref) <= r.remainder_bound + noise + 1e-12 * std::abs(ref));
  }
}

TEST_CASE("bound shrinks with N and nu") {
  const ComplexPoint s{0.5, 20};
  CHECK(remainder_bound(s, 64, 4) < remainder_bound(s, 32, 4));
  CHECK(remainder_bound(s, 64, 6) < remainder_bound(s, 64, 4));
  CHECK(remainder_bound({-2, 0}, 10, 2) == 0.0);
  CHECK_THROWS_AS(remainder_bound({-5, 0}, 10, 1), ParameterError);
}

TEST_CASE("auto_params") {
  const EvalParams p = auto_params({0.5, 14}, 1e-8);
  CHECK(p.cutoff_N >= 30);
  CHECK(p.tail_order_nu >= 2);
  CHECK(p.target_eps == 1e-8);
  CHECK(remainder_bound({0.5, 14}, p.cutoff_N, p.tail_order_nu) <= 1e-8);
  CHECK(auto_params({2, 0}, 1e-10).cutoff_N == 16);

  oracle::Sampler rng(7);
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint s{rng.uniform(-2, 3), rng.uniform(-300, 300)};
    const double eps = std::pow(10.0, -rng.uniform(4, 13));
    const EvalParams q = auto_params(s, eps);
    CHECK(zeta_gb(s, q).remainder_bound <= eps);
  }

  CHECK_THROWS_AS(auto_params({0.5, 10}, 1e-14), PrecisionError);
  CHECK_THROWS_AS(auto_params({0.5, 501}, 1e-8), ParameterError);
  CHECK_THROWS_AS(auto_params({0.5, 10}, 0.0), ParameterError);
  try {
    auto_params({0.5, 10}, 1e-15);
  } catch (const PrecisionError& e) {
    CHECK(e.best_bound() > 0);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(zeta_gb({1, 0}, EvalParams{10, 2}), PoleError);
  CHECK_THROWS_AS(zeta_gb({0.5, 0}, EvalParams{1, 2}), ParameterError);
  CHECK_THROWS_AS(zeta_gb({0.5, 0}, EvalParams{10, 0}), ParameterError);
  CHECK_THROWS_AS(zeta_gb({0.5, 0}, EvalParams{10, 30}), ParameterError);
  CHECK_THROWS_AS(zeta_gb({std::nan(""), 0}, EvalParams{10, 2}), ParameterError);
  CHECK_THROWS_AS(zeta_gb({0.5, 40}, EvalParams{4, 2, 1e-8}), PrecisionError);
  CHECK(error_kind(PoleError("x")) == ErrorKind::kParameter);
  CHECK(error_kind(BoundaryError("x")) == ErrorKind::kInconclusive);
  CHECK(error_kind(std::runtime_error("x")) == ErrorKind::kOther);
}

TEST_CASE("large cutoff bypasses the log table") {
  const ComplexPoint s{3, 1};
  const int N = static_cast<int>(kernels::kLogTableSize) + 10;
  const Complex a = Z(s, N, 2);
  const Complex b = Z(s, 64, 10);
  CHECK(std::abs(a - b) < 1e-12);
}
