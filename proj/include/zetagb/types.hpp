#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zetagb {

// Single arithmetic seam: every evaluator works in these types, so a wider
// floating type can be dropped in here without touching the public API.
using Real = double;
using Complex = std::complex<Real>;

/// A point s = re + i*im of the complex plane. Both parts must be finite.
struct ComplexPoint {
  Real re = 0.0;
  Real im = 0.0;

  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(Real re_, Real im_) : re(re_), im(im_) {}
  explicit ComplexPoint(const Complex& z) : re(z.real()), im(z.imag()) {}

  Complex value() const { return {re, im}; }
  ComplexPoint conj() const { return {re, -im}; }
  /// Horizontal offset from the critical line, Re(s) - 1/2.
  Real xi() const { return re - Real(0.5); }
  bool finite() const { return std::isfinite(re) && std::isfinite(im); }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

// Error hierarchy. The CLI maps each class onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// s outside the domain of an operation (s = 0 in the abbreviated tail, ...).
class DomainError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Q_GB is effectively infinite: |1/Q| fell below the underflow threshold.
class SingularQError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, Real best_bound)
      : Error(what), best_bound_(best_bound) {}
  Real best_bound() const { return best_bound_; }

 private:
  Real best_bound_;
};

class RefinementError : public Error {
 public:
  using Error::Error;
};

/// The argument-principle contour passes too close to a zero.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// The winding sum did not round cleanly to an integer.
class InconclusiveError : public Error {
 public:
  InconclusiveError(const std::string& what, Real winding)
      : Error(what), winding_(winding) {}
  Real winding() const { return winding_; }

 private:
  Real winding_;
};

enum class ErrorKind { kNone, kParameter, kPrecision, kInconclusive, kRefinement, kOther };

/// Category of an exception thrown by this library (kOther for foreign ones).
ErrorKind error_kind(const std::exception& e);

}  // namespace zetagb
