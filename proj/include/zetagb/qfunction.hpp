#pragma once

#include "zetagb/types.hpp"
#include "zetagb/zeta.hpp"

// The auxiliary function Q_GB(s), defined through
//   1/Q_GB(s) = sum_{n<N} n^{-s} / (s N^{1-s}) + r(N, s) / N^{1-s},
// which turns Z_GB(s) = 0 into s(s-1) + Q_GB(s) = 0. Q_GB depends on the
// truncation (N, nu); every QValue carries the parameters it was built with.
namespace zetagb {

struct QValue {
  Complex value;
  Real inverse_magnitude = 0.0;  ///< |1/Q_GB(s)|
  EvalParams params_used;
};

/// |1/Q| below this is reported as SingularQError instead of an infinite Q.
inline constexpr Real kSingularQThreshold = 1e-300;

/// Throws DomainError for s in {0, 1}, SingularQError when |1/Q| < 1e-300.
QValue q_gb(const ComplexPoint& s, const EvalParams& params);

/// s(s-1) + Q_GB(s). Vanishes (up to truncation) exactly where Z_GB does.
Complex zero_residual(const ComplexPoint& s, const EvalParams& params);

/// |Z_GB(s) - s N^{1-s} (1/(s(s-1)) + 1/Q_GB(s))|, an identity that holds at
/// every s where both sides are defined, zero or not. Z_GB comes from the
/// unabbreviated evaluator, Q_GB from the r(N, s) route.
Real consistency_identity(const ComplexPoint& s, const EvalParams& params);

}  // namespace zetagb
