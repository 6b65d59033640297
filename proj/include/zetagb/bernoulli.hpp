#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "zetagb/types.hpp"

namespace zetagb {

using Rational = boost::multiprecision::cpp_rational;

/// Largest Bernoulli index the evaluator supports. Past B_60 the tail terms
/// carry no information at binary64 precision.
inline constexpr int kBernoulliCap = 60;

/// Exact Bernoulli numbers B_0..B_max_index (B_1 = -1/2 convention).
///
/// Values are exact rationals in lowest terms. The table also keeps the
/// Euler-Maclaurin tail coefficients B_2mu / (2mu)! rounded once from the
/// exact quotient, which is all the floating-point evaluators ever read.
class BernoulliTable {
 public:
  int max_index() const { return max_index_; }

  /// B_n for 0 <= n <= max_index().
  const Rational& value(int n) const;

  /// B_2mu / (2mu)! as a correctly rounded double, for 1 <= mu <= max_index()/2.
  Real tail_coefficient(int mu) const;

  /// Highest tail order nu for which the next omitted coefficient
  /// B_{2nu+2} is still in the table (needed by the remainder bound).
  int max_tail_order() const { return max_index_ / 2 - 1; }

 private:
  friend BernoulliTable build_table(int max_index);

  int max_index_ = 0;
  std::vector<Rational> values_;
  std::vector<Real> tail_coefficients_;  // index mu, entry 0 unused
};

/// Builds B_0..B_max_index from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.
/// Throws ParameterError unless max_index is even and in [2, 60].
BernoulliTable build_table(int max_index);

/// Process-wide table up to the cap, built on first use.
const BernoulliTable& default_table();

}  // namespace zetagb
