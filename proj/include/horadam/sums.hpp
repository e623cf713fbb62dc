#pragma once

#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

#include <functional>

namespace horadam {

/// Sum_{r=0}^{k} f(r) extended to negative upper limits by the convention
///   k < 0  =>  -Sum_{r=k+1}^{-1} f(r),
/// so k = -1 is an empty range. The single telescoping law
/// sum(f, k+1) = sum(f, k) + f(k+1) with sum(f, -1) = 0 pins this down.
Rational sum_convention(const std::function<Rational(long long)>& f,
                        long long k);

/// Summand shape weight^r * W_{base_index + stride*r}. Any stride (including
/// 0) and any weight (including 0) are representable; evaluation decides
/// which combinations are singular.
struct SumSpec {
  SequenceSpec sequence;
  Rational weight;
  long long base_index = 0;
  long long stride = 0;
};

/// Sum_{r=0}^{k} weight^r * W_{base+stride*r} under the summation
/// convention. 0^0 is 1, so the r = 0 term always contributes. Weight 0
/// with k <= -2 is rejected: the convention's negative exponents make it a
/// genuine division by zero.
Rational eval_geometric_sum(const SumSpec& spec, long long k);

/// Binomial coefficient C(k, r); 0 outside 0 <= r <= k. Negative k is
/// rejected (binomial sums require a non-negative upper limit).
BigInt binomial(long long k, long long r);

/// Sum_{r=0}^{k} C(k,r) * weight^r * W_{base+stride*r}, k >= 0.
Rational eval_binomial_sum(const SumSpec& spec, long long k);

} // namespace horadam
