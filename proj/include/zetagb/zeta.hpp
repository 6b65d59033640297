#pragma once

#include <limits>
#include <utility>

#include "zetagb/bernoulli.hpp"
#include "zetagb/types.hpp"

namespace zetagb {

/// Truncation parameters of one Gram-Backlund evaluation.
struct EvalParams {
  int cutoff_N = 2;       ///< explicit Dirichlet terms n = 1..N-1
  int tail_order_nu = 1;  ///< Euler-Maclaurin correction terms mu = 1..nu
  /// Requested absolute accuracy. Infinite means "report the bound, do not
  /// enforce it", which is what explicitly chosen parameters get by default.
  Real target_eps = std::numeric_limits<Real>::infinity();

  friend bool operator==(const EvalParams&, const EvalParams&) = default;
};

/// Throws ParameterError unless N >= 2, nu >= 1, 2nu + 2 <= kBernoulliCap and
/// target_eps > 0.
void validate(const EvalParams& params);

struct EvalResult {
  Complex value;
  Real remainder_bound = 0.0;  ///< certified bound on |R_2nu|
  EvalParams params_used;
};

/// Sum_{n=1}^{N-1} n^{-s}, each term as exp(-s ln n).
Complex dirichlet_partial_sum(const ComplexPoint& s, int cutoff_N);

/// Bound on the Euler-Maclaurin remainder of Z_GB(s; N, nu) from the first
/// omitted term:
///   |B_{2nu+2}/(2nu+2)!| |s(s+1)...(s+2nu)| N^{-Re s-2nu-1} |s+2nu+1| / (Re s+2nu+1).
/// Throws ParameterError when Re s + 2nu + 1 <= 0 (bound not valid there).
Real remainder_bound(const ComplexPoint& s, int cutoff_N, int tail_order_nu);

/// The abbreviated tail r(N, s) with
///   Z_GB = partial_sum + N^{1-s}/(s-1) + s r(N, s),
/// and the remainder bound divided by |s|. Throws DomainError for s = 0.
std::pair<Complex, Real> em_tail(const ComplexPoint& s, const EvalParams& params,
                                 const BernoulliTable& table = default_table());

/// Gram-Backlund / Euler-Maclaurin value of zeta(s), evaluated from the
/// unabbreviated form (no division by s, so s = 0 is fine).
/// Throws PoleError at s = 1 and PrecisionError when the remainder bound
/// exceeds params.target_eps.
EvalResult zeta_gb(const ComplexPoint& s, const EvalParams& params);

/// As above with parameters from auto_params(s, eps).
EvalResult zeta_gb(const ComplexPoint& s, Real eps);

/// Smallest binary64 accuracy auto_params accepts.
inline constexpr Real kMinEps = 1e-13;
/// Largest |Im s| the evaluators are tuned for.
inline constexpr Real kMaxImag = 500.0;

/// Walks the schedule N = N0 * 2^k (N0 = max(16, ceil(2(|Im s|+1))), k = 0..6)
/// and nu = 2..25, returning the first entry whose bound is <= eps.
/// PrecisionError (with the best bound seen) when none qualifies or
/// eps < kMinEps; ParameterError when |Im s| > kMaxImag.
EvalParams auto_params(const ComplexPoint& s, Real eps);

/// Default accuracy: ZETAGB_DEFAULT_EPS from the environment, else 1e-8.
Real default_eps();

}  // namespace zetagb
