#pragma once

#include <optional>
#include <vector>

#include "zetagb/types.hpp"
#include "zetagb/zeta.hpp"

namespace zetagb {

/// A refined zero of Z_GB in the upper half of the critical strip.
/// Conjugate zeros are implied and never stored.
struct ZeroRecord {
  Real t = 0.0;             ///< Im s, > 0
  ComplexPoint s;           ///< refined location, not projected onto Re s = 1/2
  Real xi = 0.0;            ///< Re s - 1/2, measured
  Real z_modulus = 0.0;     ///< |Z_GB(s)| at the refined point
  Complex q_value;          ///< Q_GB(s) under params_used
  int refine_iterations = 0;
  EvalParams params_used;

  friend bool operator==(const ZeroRecord&, const ZeroRecord&) = default;
};

/// Axis-aligned region [sigma_min, sigma_max] x [t_min, t_max].
struct Rectangle {
  Real sigma_min = 0.0;
  Real sigma_max = 0.0;
  Real t_min = 0.0;
  Real t_max = 0.0;
};

/// Throws ParameterError for empty rectangles or when s = 0 or s = 1 lies on
/// the boundary.
void validate(const Rectangle& rect);

struct ScanConfig {
  Real step = 0.25;
  Real tol = 1e-8;
  int max_iter = 50;
  /// Evaluation parameters; chosen by auto_params when empty.
  std::optional<EvalParams> params;
};

struct ScanResult {
  std::vector<ZeroRecord> records;  ///< sorted by t
  int failed_refinements = 0;       ///< candidates whose Newton run failed
  int candidates = 0;
};

/// Newton step size below which the iteration is considered stalled.
inline constexpr Real kMinNewtonStep = 1e-12;
/// Central-difference step for Z'(s).
inline constexpr Real kDerivativeStep = 1e-6;

/// Complex Newton iteration s <- s - Z(s)/Z'(s), Z' by central difference
/// along the real axis. Stops once |Z(s)| <= tol; one further polishing step
/// is kept when it lowers |Z|. A seed in the lower half-plane produces the
/// record of the conjugate zero.
/// Throws RefinementError when the iterate leaves 0 < Re s < 1, stalls above
/// tol, or exceeds max_iter; ParameterError on invalid arguments.
ZeroRecord refine_zero(const ComplexPoint& seed, Real tol, int max_iter,
                       const std::optional<EvalParams>& params = std::nullopt);

/// Zeros on 1/2 + it for t in [t_min, t_max]: every local minimum of |Z_GB|
/// on a grid of spacing `step` seeds refine_zero. Refined records outside
/// [t_min, t_max] or within step/2 of an earlier record are dropped.
ScanResult scan_critical_line(Real t_min, Real t_max, const ScanConfig& config);

inline ScanResult scan_critical_line(Real t_min, Real t_max, Real step, Real tol) {
  return scan_critical_line(t_min, t_max, ScanConfig{step, tol, 50, std::nullopt});
}

struct WindingCount {
  int zeros = 0;          ///< winding number plus poles enclosed
  Real winding = 0.0;     ///< total phase change / 2 pi
  Real residual = 0.0;    ///< |winding - round(winding)|
  int evaluations = 0;
};

/// |Z| below this anywhere on the contour is treated as a zero on the boundary.
inline constexpr Real kBoundaryModulus = 1e-6;
inline constexpr int kMaxPhaseRefinement = 12;

/// Argument-principle count of zeros of Z_GB inside rect. Each edge is
/// sampled so consecutive phase increments stay below pi/2, bisecting
/// locally up to 12 levels. Throws BoundaryError when the contour passes
/// through or too close to a zero, InconclusiveError when the winding sum
/// misses an integer by 0.25 or more.
WindingCount count_zeros_rectangle(const Rectangle& rect, const EvalParams& params);

/// Parameters good to eps on the whole rectangle (auto_params at the corner
/// with the largest |Im s| and smallest Re s).
EvalParams rectangle_params(const Rectangle& rect, Real eps);

}  // namespace zetagb
