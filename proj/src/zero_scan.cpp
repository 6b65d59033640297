#include "zetagb/zero_scan.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <string>

#include "zetagb/qfunction.hpp"

namespace zetagb {

namespace {

constexpr Real kMinTol = 1e-10;

// Evaluation accuracy used while refining to `tol`.
Real newton_eps(Real tol) { return std::max(kMinEps, tol * 1e-2); }

EvalParams unconstrained(EvalParams params) {
  params.target_eps = std::numeric_limits<Real>::infinity();
  return params;
}

bool inside_strip(const Complex& s) { return s.real() > 0.0 && s.real() < 1.0; }

bool on_segment(Real fixed, Real lo, Real hi, Real fixed_target, Real free_target) {
  return fixed == fixed_target && lo <= free_target && free_target <= hi;
}

}  // namespace

void validate(const Rectangle& rect) {
  if (!(rect.sigma_min < rect.sigma_max) || !(rect.t_min < rect.t_max))
    throw ParameterError("rectangle needs sigma_min < sigma_max and t_min < t_max");
  for (const Real special : {0.0, 1.0}) {
    const bool hit = on_segment(rect.sigma_min, rect.t_min, rect.t_max, special, 0.0) ||
                     on_segment(rect.sigma_max, rect.t_min, rect.t_max, special, 0.0) ||
                     on_segment(rect.t_min, rect.sigma_min, rect.sigma_max, 0.0, special) ||
                     on_segment(rect.t_max, rect.sigma_min, rect.sigma_max, 0.0, special);
    if (hit) throw ParameterError("rectangle boundary passes through s = 0 or s = 1");
  }
}

ZeroRecord refine_zero(const ComplexPoint& seed, Real tol, int max_iter,
                       const std::optional<EvalParams>& params) {
  if (!seed.finite()) throw ParameterError("seed must be finite");
  if (!inside_strip(seed.value())) throw ParameterError("seed must lie inside the critical strip 0 < Re s < 1");
  if (max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (!(tol >= kMinTol)) throw ParameterError("refinement tolerance must be >= 1e-10");

  const EvalParams chosen =
      params ? *params : auto_params(ComplexPoint{seed.re, std::abs(seed.im) + 1.0}, newton_eps(tol));
  const EvalParams eval_params = unconstrained(chosen);
  auto zeta = [&](const Complex& z) { return zeta_gb(ComplexPoint(z), eval_params).value; };
  auto derivative = [&](const Complex& z) {
    return (zeta(z + kDerivativeStep) - zeta(z - kDerivativeStep)) / (2.0 * kDerivativeStep);
  };

  Complex s = seed.value();
  Complex z = zeta(s);
  int iterations = 0;
  while (std::abs(z) > tol) {
    if (iterations == max_iter)
      throw RefinementError("Newton did not converge within " + std::to_string(max_iter) + " iterations");
    const Complex d = derivative(s);
    if (d == Complex(0.0) || !std::isfinite(std::abs(d)))
      throw RefinementError("vanishing derivative during Newton refinement");
    const Complex step = z / d;
    s -= step;
    ++iterations;
    if (!inside_strip(s) || !std::isfinite(std::abs(s)))
      throw RefinementError("Newton iterate left the critical strip");
    z = zeta(s);
    if (std::abs(step) < kMinNewtonStep && std::abs(z) > tol)
      throw RefinementError("Newton iteration stalled above tolerance");
  }

  // Quadratic convergence: one more step usually lands at the rounding floor.
  if (const Complex d = derivative(s); d != Complex(0.0)) {
    const Complex polished = s - z / d;
    if (inside_strip(polished)) {
      const Complex zp = zeta(polished);
      if (std::abs(zp) <= std::abs(z)) {
        s = polished;
        z = zp;
        ++iterations;
      }
    }
  }

  if (s.imag() == 0.0) throw RefinementError("refinement converged onto the real axis");
  if (s.imag() < 0.0) {
    s = std::conj(s);
    z = std::conj(z);
  }

  ZeroRecord rec;
  rec.t = s.imag();
  rec.s = ComplexPoint(s);
  rec.xi = rec.s.xi();
  rec.z_modulus = std::abs(z);
  try {
    rec.q_value = q_gb(rec.s, eval_params).value;
  } catch (const SingularQError& e) {
    throw RefinementError(std::string("Q_GB singular at refined point: ") + e.what());
  }
  rec.refine_iterations = iterations;
  rec.params_used = chosen;
  return rec;
}

ScanResult scan_critical_line(Real t_min, Real t_max, const ScanConfig& config) {
  if (!(t_min >= 0.0) || !(t_max > t_min)) throw ParameterError("scan needs 0 <= t_min < t_max");
  if (!(config.step > 0.0) || config.step > 0.5) throw ParameterError("scan step must be in (0, 0.5]");
  if (!(config.tol >= kMinTol)) throw ParameterError("scan tolerance must be >= 1e-10");
  if (t_max > kMaxImag) throw ParameterError("scan range beyond |t| = 500");

  const EvalParams grid_params = unconstrained(
      config.params ? *config.params : auto_params(ComplexPoint{0.5, t_max + 1.0}, newton_eps(config.tol)));

  std::vector<Real> grid;
  const auto steps = static_cast<long>(std::floor((t_max - t_min) / config.step + 1e-9));
  for (long k = 0; k <= steps; ++k) grid.push_back(t_min + static_cast<Real>(k) * config.step);
  if (grid.back() < t_max - 1e-12) grid.push_back(t_max);

  std::vector<Real> modulus(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    modulus[k] = std::abs(zeta_gb(ComplexPoint{0.5, grid[k]}, grid_params).value);

  ScanResult result;
  std::vector<ZeroRecord> found;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const bool below_left = k == 0 || modulus[k] < modulus[k - 1];
    const bool below_right = k + 1 == grid.size() || modulus[k] <= modulus[k + 1];
    if (!below_left || !below_right) continue;
    ++result.candidates;
    try {
      ZeroRecord rec = refine_zero(ComplexPoint{0.5, grid[k]}, config.tol, config.max_iter, config.params);
      if (rec.t >= t_min && rec.t <= t_max) found.push_back(rec);
    } catch (const RefinementError&) {
      ++result.failed_refinements;
    }
  }

  std::sort(found.begin(), found.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });
  for (const auto& rec : found) {
    if (!result.records.empty() && rec.t - result.records.back().t < config.step / 2) continue;
    result.records.push_back(rec);
  }
  return result;
}

EvalParams rectangle_params(const Rectangle& rect, Real eps) {
  validate(rect);
  const std::array<ComplexPoint, 4> corners{ComplexPoint{rect.sigma_min, rect.t_min},
                                            ComplexPoint{rect.sigma_max, rect.t_min},
                                            ComplexPoint{rect.sigma_max, rect.t_max},
                                            ComplexPoint{rect.sigma_min, rect.t_max}};
  EvalParams params{2, 1, eps};
  for (const auto& c : corners) {
    const EvalParams p = auto_params(c, eps);
    params.cutoff_N = std::max(params.cutoff_N, p.cutoff_N);
    params.tail_order_nu = std::max(params.tail_order_nu, p.tail_order_nu);
  }
  return params;
}

namespace {

class ContourWalker {
 public:
  explicit ContourWalker(const EvalParams& params) : params_(unconstrained(params)) {}

  Complex eval(const Complex& s) {
    ++evaluations_;
    const Complex z = zeta_gb(ComplexPoint(s), params_).value;
    if (!(std::abs(z) >= kBoundaryModulus))
      throw BoundaryError("|Z_GB| < 1e-6 on the contour near s = " + std::to_string(s.real()) + " + " +
                          std::to_string(s.imag()) + "i; nudge the rectangle");
    return z;
  }

  // Phase change of Z along [a, b], bisected until each piece turns < pi/2.
  Real increment(const Complex& a, const Complex& za, const Complex& b, const Complex& zb, int depth) {
    const Real delta = std::arg(zb / za);
    if (std::abs(delta) < std::numbers::pi / 2) return delta;
    if (depth == kMaxPhaseRefinement)
      throw BoundaryError("phase step not resolved after 12 refinements near s = " +
                          std::to_string(a.real()) + " + " + std::to_string(a.imag()) +
                          "i; a zero sits close to the boundary");
    const Complex mid = (a + b) / Real(2);
    const Complex zm = eval(mid);
    return increment(a, za, mid, zm, depth + 1) + increment(mid, zm, b, zb, depth + 1);
  }

  Real edge(const Complex& from, const Complex& to) {
    constexpr Real kInitialSpacing = 0.1;
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / kInitialSpacing)));
    Real total = 0.0;
    Complex a = from;
    Complex za = eval(a);
    for (int j = 1; j <= pieces; ++j) {
      const Complex b = j == pieces ? to : from + (to - from) * (static_cast<Real>(j) / pieces);
      const Complex zb = eval(b);
      total += increment(a, za, b, zb, 0);
      a = b;
      za = zb;
    }
    return total;
  }

  int evaluations() const { return evaluations_; }

 private:
  EvalParams params_;
  int evaluations_ = 0;
};

}  // namespace

WindingCount count_zeros_rectangle(const Rectangle& rect, const EvalParams& params) {
  validate(rect);
  validate(params);

  const Complex c0{rect.sigma_min, rect.t_min};
  const Complex c1{rect.sigma_max, rect.t_min};
  const Complex c2{rect.sigma_max, rect.t_max};
  const Complex c3{rect.sigma_min, rect.t_max};

  ContourWalker walker(params);
  const Real phase = walker.edge(c0, c1) + walker.edge(c1, c2) + walker.edge(c2, c3) + walker.edge(c3, c0);

  WindingCount count;
  count.winding = phase / (2.0 * std::numbers::pi);
  const Real rounded = std::round(count.winding);
  count.residual = std::abs(count.winding - rounded);
  count.evaluations = walker.evaluations();
  if (count.residual >= 0.25)
    throw InconclusiveError("winding sum " + std::to_string(count.winding) + " is not near an integer",
                            count.winding);

  // The winding number counts zeros minus poles; the only pole is s = 1.
  const bool pole_inside =
      rect.sigma_min < 1.0 && 1.0 < rect.sigma_max && rect.t_min < 0.0 && 0.0 < rect.t_max;
  count.zeros = static_cast<int>(rounded) + (pole_inside ? 1 : 0);
  return count;
}

}  // namespace zetagb
