#include "horadam/sums.hpp"

#include <stdexcept>

namespace horadam {

Rational sum_convention(const std::function<Rational(long long)>& f,
                        long long k) {
  Rational total;
  if (k >= 0) {
    for (long long r = 0; r <= k; ++r)
      total += f(r);
    return total;
  }
  for (long long r = k + 1; r <= -1; ++r)
    total += f(r);
  return -total;
}

Rational eval_geometric_sum(const SumSpec& spec, long long k) {
  if (spec.weight.is_zero() && k <= -2)
    throw std::domain_error(
        "eval_geometric_sum: weight 0 is singular for k <= -2");
  // Incremental powers; agreement with the sum_convention + pow route is
  // pinned by tests.
  Rational total;
  if (k >= 0) {
    Rational wr(1); // weight^0, also when weight == 0
    for (long long r = 0; r <= k; ++r) {
      total += wr * term(spec.sequence, spec.base_index + spec.stride * r);
      if (r < k)
        wr *= spec.weight;
    }
    return total;
  }
  Rational wr = Rational::pow(spec.weight, k + 1);
  for (long long r = k + 1; r <= -1; ++r) {
    total += wr * term(spec.sequence, spec.base_index + spec.stride * r);
    wr *= spec.weight;
  }
  return -total;
}

BigInt binomial(long long k, long long r) {
  if (k < 0)
    throw std::invalid_argument("binomial: upper index must be >= 0");
  if (r < 0 || r > k)
    return 0;
  if (r > k - r)
    r = k - r;
  BigInt out = 1;
  for (long long i = 0; i < r; ++i) {
    out *= (k - i);
    out /= (i + 1); // exact at every step
  }
  return out;
}

Rational eval_binomial_sum(const SumSpec& spec, long long k) {
  if (k < 0)
    throw std::invalid_argument(
        "eval_binomial_sum: upper limit must be >= 0");
  Rational total;
  Rational wr(1);
  BigInt coef = 1; // C(k, 0)
  for (long long r = 0; r <= k; ++r) {
    total +=
        Rational(coef) * wr * term(spec.sequence, spec.base_index + spec.stride * r);
    if (r < k) {
      wr *= spec.weight;
      coef = coef * (k - r) / (r + 1);
    }
  }
  return total;
}

} // namespace horadam
