#include "zetagb/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "zetagb/kernels.hpp"

namespace zetagb {

namespace {

// N^w for real N > 0: exp(w ln N) on the principal branch.
Complex real_base_pow(int N, const Complex& w) {
  return std::exp(w * std::log(static_cast<Real>(N)));
}

void require_finite(const ComplexPoint& s) {
  if (!s.finite()) throw ParameterError("evaluation point must be finite");
}

}  // namespace

void validate(const EvalParams& params) {
  if (params.cutoff_N < 2)
    throw ParameterError("cutoff N must be >= 2, got " + std::to_string(params.cutoff_N));
  if (params.tail_order_nu < 1)
    throw ParameterError("tail order nu must be >= 1, got " + std::to_string(params.tail_order_nu));
  if (2 * params.tail_order_nu + 2 > kBernoulliCap)
    throw ParameterError("tail order nu = " + std::to_string(params.tail_order_nu) +
                         " needs B_" + std::to_string(2 * params.tail_order_nu + 2) +
                         ", beyond the Bernoulli cap");
  if (!(params.target_eps > 0.0))
    throw ParameterError("target accuracy must be positive");
}

Complex dirichlet_partial_sum(const ComplexPoint& s, int cutoff_N) {
  if (cutoff_N < 2)
    throw ParameterError("cutoff N must be >= 2, got " + std::to_string(cutoff_N));
  require_finite(s);
  const auto count = static_cast<std::size_t>(cutoff_N - 1);
  const auto kind = kernels::active_kernel();
  if (count <= kernels::kLogTableSize)
    return kernels::dirichlet_sum(kind, kernels::log_table(count), s.value());

  std::vector<Real> logs(count);
  for (std::size_t i = 0; i < count; ++i) logs[i] = std::log(static_cast<Real>(i + 1));
  return kernels::dirichlet_sum(kind, logs, s.value());
}

Real remainder_bound(const ComplexPoint& s, int cutoff_N, int tail_order_nu) {
  const BernoulliTable& table = default_table();
  if (tail_order_nu < 1 || tail_order_nu > table.max_tail_order())
    throw ParameterError("tail order nu outside [1, " + std::to_string(table.max_tail_order()) + "]");
  if (cutoff_N < 2) throw ParameterError("cutoff N must be >= 2");

  const Real decay = s.re + 2 * tail_order_nu + 1;
  if (!(decay > 0.0))
    throw ParameterError("remainder bound needs Re(s) + 2nu + 1 > 0; raise nu");

  const Complex z = s.value();
  Real product = 1.0;
  for (int k = 0; k <= 2 * tail_order_nu; ++k) product *= std::abs(z + Real(k));
  if (product == 0.0) return 0.0;

  const Real coeff = std::abs(table.tail_coefficient(tail_order_nu + 1));
  const Real n_pow = std::exp(-decay * std::log(static_cast<Real>(cutoff_N)));
  return coeff * product * n_pow * std::abs(z + Real(2 * tail_order_nu + 1)) / decay;
}

std::pair<Complex, Real> em_tail(const ComplexPoint& s, const EvalParams& params,
                                 const BernoulliTable& table) {
  validate(params);
  require_finite(s);
  if (s.re == 0.0 && s.im == 0.0) throw DomainError("abbreviated tail r(N, s) is undefined at s = 0");
  if (table.max_index() < 2 * (params.tail_order_nu + 1))
    throw ParameterError("Bernoulli table too small for tail order " +
                         std::to_string(params.tail_order_nu));

  const Complex z = s.value();
  const int N = params.cutoff_N;
  const Real inv_n2 = 1.0 / (static_cast<Real>(N) * N);

  Complex r = real_base_pow(N, -z) / (Real(2) * z);
  Complex rising = 1.0;                     // (s+1)(s+2)...(s+2mu-2)
  Complex n_pow = real_base_pow(N, -z - Real(1));  // N^{-s-2mu+1}
  for (int mu = 1; mu <= params.tail_order_nu; ++mu) {
    r += table.tail_coefficient(mu) * rising * n_pow;
    rising *= (z + Real(2 * mu - 1)) * (z + Real(2 * mu));
    n_pow *= inv_n2;
  }
  const Real bound = remainder_bound(s, N, params.tail_order_nu) / std::abs(z);
  return {r, bound};
}

EvalResult zeta_gb(const ComplexPoint& s, const EvalParams& params) {
  validate(params);
  require_finite(s);
  if (s.re == 1.0 && s.im == 0.0) throw PoleError("zeta has a simple pole at s = 1");

  const BernoulliTable& table = default_table();
  const Complex z = s.value();
  const int N = params.cutoff_N;
  const Real inv_n2 = 1.0 / (static_cast<Real>(N) * N);

  Complex value = dirichlet_partial_sum(s, N);
  value += real_base_pow(N, Real(1) - z) / (z - Real(1));
  value += real_base_pow(N, -z) / Real(2);

  Complex rising = z;                       // s(s+1)...(s+2mu-2)
  Complex n_pow = real_base_pow(N, -z - Real(1));
  for (int mu = 1; mu <= params.tail_order_nu; ++mu) {
    value += table.tail_coefficient(mu) * rising * n_pow;
    rising *= (z + Real(2 * mu - 1)) * (z + Real(2 * mu));
    n_pow *= inv_n2;
  }

  EvalResult result{value, remainder_bound(s, N, params.tail_order_nu), params};
  if (result.remainder_bound > params.target_eps)
    throw PrecisionError("remainder bound " + std::to_string(result.remainder_bound) +
                             " exceeds target accuracy",
                         result.remainder_bound);
  return result;
}

EvalResult zeta_gb(const ComplexPoint& s, Real eps) {
  return zeta_gb(s, auto_params(s, eps));
}

EvalParams auto_params(const ComplexPoint& s, Real eps) {
  require_finite(s);
  if (!(eps > 0.0)) throw ParameterError("accuracy must be positive");
  const Real t = std::abs(s.im);
  if (t > kMaxImag)
    throw ParameterError("|Im s| = " + std::to_string(t) + " beyond the supported range 500");

  const int base = std::max(16, static_cast<int>(std::ceil(2.0 * (t + 1.0))));
  Real best = std::numeric_limits<Real>::infinity();
  for (int doubling = 0; doubling <= 6; ++doubling) {
    const int N = base << doubling;
    for (int nu = 2; nu <= 25; ++nu) {
      if (!(s.re + 2 * nu + 1 > 0.0)) continue;
      const Real bound = remainder_bound(s, N, nu);
      best = std::min(best, bound);
      if (eps >= kMinEps && bound <= eps) return EvalParams{N, nu, eps};
    }
  }
  if (eps < kMinEps)
    throw PrecisionError("requested accuracy is below the binary64 floor 1e-13", best);
  throw PrecisionError("no (N, nu) in the schedule reaches the requested accuracy", best);
}

Real default_eps() {
  const char* env = std::getenv("ZETAGB_DEFAULT_EPS");
  if (env == nullptr || *env == '\0') return 1e-8;
  char* end = nullptr;
  const Real eps = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(eps > 0.0))
    throw ParameterError(std::string("ZETAGB_DEFAULT_EPS is not a positive number: ") + env);
  return eps;
}

ErrorKind error_kind(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return ErrorKind::kParameter;
  if (dynamic_cast<const PrecisionError*>(&e)) return ErrorKind::kPrecision;
  if (dynamic_cast<const BoundaryError*>(&e) || dynamic_cast<const InconclusiveError*>(&e))
    return ErrorKind::kInconclusive;
  if (dynamic_cast<const RefinementError*>(&e)) return ErrorKind::kRefinement;
  return ErrorKind::kOther;
}

}  // namespace zetagb
