#include "zetagb/kernels.hpp"

namespace zetagb::kernels {

// Reference kernel: one real log (precomputed) and one complex exp per term.
Complex dirichlet_sum_scalar(std::span<const Real> log_n, Complex s) {
  Real re = 0.0;
  Real im = 0.0;
  for (const Real l : log_n) {
    const Complex term = std::exp(Complex(-s.real() * l, -s.imag() * l));
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

}  // namespace zetagb::kernels
