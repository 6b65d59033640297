#include "zetagb/qfunction.hpp"

namespace zetagb {

namespace {

void require_q_domain(const ComplexPoint& s) {
  if (s.im == 0.0 && (s.re == 0.0 || s.re == 1.0))
    throw DomainError("Q_GB is undefined at s = 0 and s = 1");
}

Complex n_pow_one_minus_s(const ComplexPoint& s, int N) {
  return std::exp((Real(1) - s.value()) * std::log(static_cast<Real>(N)));
}

}  // namespace

QValue q_gb(const ComplexPoint& s, const EvalParams& params) {
  validate(params);
  require_q_domain(s);

  const Complex z = s.value();
  const Complex partial = dirichlet_partial_sum(s, params.cutoff_N);
  const Complex tail = em_tail(s, params).first;
  const Complex scale = n_pow_one_minus_s(s, params.cutoff_N);

  const Complex inverse = partial / (z * scale) + tail / scale;
  const Real inverse_magnitude = std::abs(inverse);
  if (!(inverse_magnitude >= kSingularQThreshold))
    throw SingularQError("1/Q_GB vanishes at this point (Q effectively infinite)");
  return QValue{Real(1) / inverse, inverse_magnitude, params};
}

Complex zero_residual(const ComplexPoint& s, const EvalParams& params) {
  const Complex z = s.value();
  return z * (z - Real(1)) + q_gb(s, params).value;
}

Real consistency_identity(const ComplexPoint& s, const EvalParams& params) {
  const QValue q = q_gb(s, params);
  const Complex z = s.value();
  EvalParams unconstrained = params;
  unconstrained.target_eps = std::numeric_limits<Real>::infinity();
  const Complex zeta = zeta_gb(s, unconstrained).value;

  const Complex rebuilt =
      z * n_pow_one_minus_s(s, params.cutoff_N) * (Real(1) / (z * (z - Real(1))) + Real(1) / q.value);
  return std::abs(zeta - rebuilt);
}

}  // namespace zetagb
