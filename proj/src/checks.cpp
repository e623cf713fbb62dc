#include "horadam/checks.hpp"

#include "horadam/sums.hpp"

#include <stdexcept>

namespace horadam {

std::string_view to_string(SkipReason reason) {
  switch (reason) {
  case SkipReason::ZeroDenominator: return "ZeroDenominator";
  case SkipReason::PreconditionUnmet: return "PreconditionUnmet";
  }
  return "?";
}

namespace {

void require_same_recurrence(const SequenceSpec& x, const SequenceSpec& y) {
  if (!x.same_recurrence(y))
    throw std::invalid_argument(
        "sequences must share one recurrence pair (p, q)");
}

struct Deltas {
  Rational dxy; // X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}
  Rational d1;  // X_{d-c} Y_{e-b} - X_{e-c} Y_{d-b}
  Rational d2;  // X_{d-a} X_{e-c} - X_{e-a} X_{d-c}
};

Deltas deltas(const SequenceSpec& x, const SequenceSpec& y, long long a,
              long long b, long long c, long long d, long long e) {
  const Rational xda = term(x, d - a), xea = term(x, e - a);
  const Rational xdc = term(x, d - c), xec = term(x, e - c);
  const Rational yeb = term(y, e - b), ydb = term(y, d - b);
  return {xda * yeb - xea * ydb, xdc * yeb - xec * ydb, xda * xec - xea * xdc};
}

} // namespace

Rational delta2(const DeltaArgs& args) {
  require_same_recurrence(args.x, args.y);
  return term(args.x, args.d - args.a) * term(args.y, args.e - args.b) -
         term(args.x, args.e - args.a) * term(args.y, args.d - args.b);
}

std::optional<LambdaPair> solve_lambda_pair(const SequenceSpec& x,
                                            const SequenceSpec& y, long long a,
                                            long long b, long long c,
                                            long long d, long long e) {
  require_same_recurrence(x, y);
  const Deltas dd = deltas(x, y, a, b, c, d, e);
  if (dd.dxy.is_zero())
    return std::nullopt;
  return LambdaPair{dd.d1 / dd.dxy, dd.d2 / dd.dxy};
}

CheckOutcome check_three_term_xy(const SequenceSpec& x, const SequenceSpec& y,
                                 long long a, long long b, long long c,
                                 long long d, long long e, long long m,
                                 bool strict) {
  require_same_recurrence(x, y);
  const Deltas dd = deltas(x, y, a, b, c, d, e);
  if (strict && dd.dxy.is_zero())
    return CheckOutcome::skipped(SkipReason::PreconditionUnmet);
  return compare_exact(dd.dxy * term(x, m - c),
                       dd.d1 * term(x, m - a) + dd.d2 * term(y, m - b));
}

CheckOutcome check_three_term_xx(const SequenceSpec& x, long long a,
                                 long long b, long long c, long long d,
                                 long long e, long long m) {
  const Deltas dd = deltas(x, x, a, b, c, d, e);
  return compare_exact(dd.dxy * term(x, m - c),
                       dd.d1 * term(x, m - a) + dd.d2 * term(x, m - b));
}

CheckOutcome check_three_term_origin(const SequenceSpec& x, long long a,
                                     long long b, long long c, long long m) {
  const Rational x0 = term(x, 0);
  const Rational lhs =
      (x0 * x0 - term(x, b - a) * term(x, a - b)) * term(x, m - c);
  const Rational rhs =
      (term(x, a - c) * x0 - term(x, b - c) * term(x, a - b)) * term(x, m - a) +
      (x0 * term(x, b - c) - term(x, b - a) * term(x, a - c)) * term(x, m - b);
  return compare_exact(lhs, rhs);
}

CheckOutcome check_weighted_sum_xy(const SequenceSpec& x,
                                   const SequenceSpec& y, long long a,
                                   long long b, long long c, long long d,
                                   long long e, long long m, long long k) {
  require_same_recurrence(x, y);
  const Deltas dd = deltas(x, y, a, b, c, d, e);
  if (dd.dxy.is_zero() || dd.d1.is_zero() || dd.d2.is_zero())
    return CheckOutcome::skipped(SkipReason::ZeroDenominator);

  const Rational w = dd.dxy / dd.d1;
  const long long stride = a - c;
  const Rational lhs = eval_geometric_sum(
      SumSpec{y, w, m - k * stride - b + c, stride}, k);
  const Rational rhs = (dd.dxy / dd.d2) * Rational::pow(w, k) * term(x, m) -
                       (dd.d1 / dd.d2) * term(x, m - (k + 1) * stride);
  return compare_exact(lhs, rhs);
}

CheckOutcome check_weighted_sum_xx(const SequenceSpec& x, int variant,
                                   long long a, long long b, long long c,
                                   long long d, long long e, long long m,
                                   long long k) {
  if (variant < 1 || variant > 3)
    throw std::invalid_argument("check_weighted_sum_xx: variant must be 1..3");
  const Deltas dd = deltas(x, x, a, b, c, d, e);
  const Rational& dxx = dd.dxy;
  if (dd.d1.is_zero() || dd.d2.is_zero())
    return CheckOutcome::skipped(SkipReason::ZeroDenominator);
  if (dxx.is_zero() && (variant == 3 || k < 0))
    return CheckOutcome::skipped(SkipReason::ZeroDenominator);

  Rational w, lhs, rhs;
  long long stride;
  switch (variant) {
  case 1:
    w = dxx / dd.d1;
    stride = a - c;
    lhs = eval_geometric_sum(SumSpec{x, w, m - k * stride - b + c, stride}, k);
    rhs = (dxx / dd.d2) * Rational::pow(w, k) * term(x, m) -
          (dd.d1 / dd.d2) * term(x, m - (k + 1) * stride);
    break;
  case 2:
    w = dxx / dd.d2;
    stride = b - c;
    lhs = eval_geometric_sum(SumSpec{x, w, m - k * stride - a + c, stride}, k);
    rhs = (dxx / dd.d1) * Rational::pow(w, k) * term(x, m) -
          (dd.d2 / dd.d1) * term(x, m - (k + 1) * stride);
    break;
  default:
    w = -(dd.d2 / dd.d1);
    stride = a - b;
    lhs = eval_geometric_sum(SumSpec{x, w, m - k * stride + b - c, stride}, k);
    rhs = (dd.d2 / dxx) * Rational::pow(w, k) * term(x, m) +
          (dd.d1 / dxx) * term(x, m - (k + 1) * stride);
    break;
  }
  return compare_exact(lhs, rhs);
}

CheckOutcome check_binomial_sum(const SequenceSpec& x, int variant,
                                long long a, long long b, long long c,
                                long long d, long long e, long long m,
                                long long k) {
  if (variant < 1 || variant > 3)
    throw std::invalid_argument("check_binomial_sum: variant must be 1..3");
  if (k < 0)
    throw std::invalid_argument("check_binomial_sum: k must be >= 0");
  const Deltas dd = deltas(x, x, a, b, c, d, e);
  const Rational& dxx = dd.dxy;

  Rational w, rhs_base;
  long long base, stride;
  switch (variant) {
  case 1:
    if (dd.d2.is_zero())
      return CheckOutcome::skipped(SkipReason::ZeroDenominator);
    w = dd.d1 / dd.d2;
    base = m - (b - c) * k;
    stride = b - a;
    rhs_base = dxx / dd.d2;
    break;
  case 2:
    if (dd.d2.is_zero())
      return CheckOutcome::skipped(SkipReason::ZeroDenominator);
    w = -(dxx / dd.d2);
    base = m + (a - b) * k;
    stride = b - c;
    rhs_base = -(dd.d1 / dd.d2);
    break;
  default:
    if (dd.d1.is_zero())
      return CheckOutcome::skipped(SkipReason::ZeroDenominator);
    w = -(dxx / dd.d1);
    base = m + (b - a) * k;
    stride = a - c;
    rhs_base = -(dd.d2 / dd.d1);
    break;
  }
  const Rational lhs = eval_binomial_sum(SumSpec{x, w, base, stride}, k);
  return compare_exact(lhs, Rational::pow(rhs_base, k) * term(x, m));
}

} // namespace horadam
