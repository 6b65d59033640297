#include "zetagb/bernoulli.hpp"

#include <string>

namespace zetagb {

namespace {

using boost::multiprecision::cpp_int;

// Row n of Pascal's triangle, C(n, 0..n).
std::vector<cpp_int> binomial_row(int n) {
  std::vector<cpp_int> row(n + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

}  // namespace

const Rational& BernoulliTable::value(int n) const {
  if (n < 0 || n > max_index_)
    throw ParameterError("Bernoulli index " + std::to_string(n) + " outside table");
  return values_[n];
}

Real BernoulliTable::tail_coefficient(int mu) const {
  if (mu < 1 || 2 * mu > max_index_)
    throw ParameterError("tail coefficient order " + std::to_string(mu) + " outside table");
  return tail_coefficients_[mu];
}

BernoulliTable build_table(int max_index) {
  if (max_index < 2 || max_index > kBernoulliCap || max_index % 2 != 0)
    throw ParameterError("Bernoulli max_index must be even and in [2, " +
                         std::to_string(kBernoulliCap) + "], got " + std::to_string(max_index));

  BernoulliTable table;
  table.max_index_ = max_index;
  table.values_.assign(max_index + 1, Rational(0));
  table.values_[0] = 1;

  // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k. The odd entries past B_1 come
  // out as exact zeros, so they are computed rather than assumed.
  for (int n = 1; n <= max_index; ++n) {
    const auto row = binomial_row(n + 1);
    Rational acc = 0;
    for (int k = 0; k < n; ++k) {
      if (table.values_[k] != 0) acc += Rational(row[k]) * table.values_[k];
    }
    table.values_[n] = -acc / (n + 1);
  }

  table.tail_coefficients_.assign(max_index / 2 + 1, 0.0);
  cpp_int factorial = 1;
  for (int mu = 1; 2 * mu <= max_index; ++mu) {
    factorial *= (2 * mu - 1) * (2 * mu);
    const Rational coeff = table.values_[2 * mu] / Rational(factorial);
    table.tail_coefficients_[mu] = coeff.convert_to<Real>();
  }
  return table;
}

const BernoulliTable& default_table() {
  static const BernoulliTable table = build_table(kBernoulliCap);
  return table;
}

}  // namespace zetagb
