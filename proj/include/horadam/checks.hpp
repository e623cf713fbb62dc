#pragma once

#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

#include <optional>
#include <string_view>

namespace horadam {

enum class SkipReason {
  ZeroDenominator,   // a nonvanishing-denominator hypothesis failed
  PreconditionUnmet, // a strict-mode hypothesis failed
};

std::string_view to_string(SkipReason reason);

/// Result of checking one identity instance. A vanishing denominator is
/// never a failure: Skipped and Fails are distinct outcomes, and Fails
/// carries both exactly evaluated sides for diagnosis.
class CheckOutcome {
public:
  enum class Kind { Holds, Fails, Skipped };

  static CheckOutcome holds() { return CheckOutcome(Kind::Holds); }
  static CheckOutcome fails(Rational lhs, Rational rhs) {
    CheckOutcome o(Kind::Fails);
    o.lhs_ = std::move(lhs);
    o.rhs_ = std::move(rhs);
    return o;
  }
  static CheckOutcome skipped(SkipReason reason) {
    CheckOutcome o(Kind::Skipped);
    o.reason_ = reason;
    return o;
  }

  Kind kind() const { return kind_; }
  bool is_holds() const { return kind_ == Kind::Holds; }
  bool is_fails() const { return kind_ == Kind::Fails; }
  bool is_skipped() const { return kind_ == Kind::Skipped; }

  const Rational& lhs() const { return *lhs_; }
  const Rational& rhs() const { return *rhs_; }
  SkipReason reason() const { return *reason_; }

private:
  explicit CheckOutcome(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Rational> lhs_;
  std::optional<Rational> rhs_;
  std::optional<SkipReason> reason_;
};

inline CheckOutcome compare_exact(Rational lhs, Rational rhs) {
  if (lhs == rhs)
    return CheckOutcome::holds();
  return CheckOutcome::fails(std::move(lhs), std::move(rhs));
}

/// Inputs of the 2x2 determinant X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}.
/// Invariant: x and y share one recurrence pair.
struct DeltaArgs {
  SequenceSpec x;
  SequenceSpec y;
  long long d = 0;
  long long e = 0;
  long long a = 0;
  long long b = 0;
};

Rational delta2(const DeltaArgs& args);

/// Coefficients of the three-term relation
///   X_{m-c} = lambda1 * X_{m-a} + lambda2 * Y_{m-b},
/// solved from the instances at m = d and m = e.
struct LambdaPair {
  Rational lambda1;
  Rational lambda2;
};

/// Cramer solution; empty when the determinant Delta_xy vanishes
/// (the skipped case). Mismatched recurrence pairs are rejected.
std::optional<LambdaPair> solve_lambda_pair(const SequenceSpec& x,
                                            const SequenceSpec& y, long long a,
                                            long long b, long long c,
                                            long long d, long long e);

/// Three-term relation between X_{m-c}, X_{m-a} and Y_{m-b} for a pair of
/// sequences sharing one recurrence, checked in cleared-denominator form:
///   Dxy * X_{m-c} == D1 * X_{m-a} + D2 * Y_{m-b}.
/// Non-strict mode checks every tuple (the hypothesis-free form for the
/// built-in pairs); strict mode instead skips when Dxy = 0.
CheckOutcome check_three_term_xy(const SequenceSpec& x, const SequenceSpec& y,
                                 long long a, long long b, long long c,
                                 long long d, long long e, long long m,
                                 bool strict = false);

/// Single-sequence three-term relation; holds for all integer tuples, no
/// skip case.
CheckOutcome check_three_term_xx(const SequenceSpec& x, long long a,
                                 long long b, long long c, long long d,
                                 long long e, long long m);

/// Variant of the single-sequence relation whose determinants are anchored
/// at W_0:
///   (X_0^2 - X_{b-a} X_{a-b}) X_{m-c}
///     == (X_{a-c} X_0 - X_{b-c} X_{a-b}) X_{m-a}
///      + (X_0 X_{b-c} - X_{b-a} X_{a-c}) X_{m-b}.
CheckOutcome check_three_term_origin(const SequenceSpec& x, long long a,
                                     long long b, long long c, long long m);

/// Geometric-weighted sum identity for an (X, Y) pair: the left side is the
/// direct conventional sum of (Dxy/D1)^r Y_{m-k(a-c)-b+c+(a-c)r}, the right
/// side the displayed closed form. Skips when Dxy, D1 or D2 vanishes.
CheckOutcome check_weighted_sum_xy(const SequenceSpec& x,
                                   const SequenceSpec& y, long long a,
                                   long long b, long long c, long long d,
                                   long long e, long long m, long long k);

/// The three single-sequence geometric-weighted sum identities. Skips when
/// D1 or D2 vanishes, when variant 3's right-side denominator Dxx vanishes,
/// or when k < 0 turns a zero weight numerator into a denominator.
CheckOutcome check_weighted_sum_xx(const SequenceSpec& x, int variant,
                                   long long a, long long b, long long c,
                                   long long d, long long e, long long m,
                                   long long k);

/// The three single-sequence binomial-weighted sum identities, k >= 0.
/// Each variant has one denominator (D2 for variants 1-2, D1 for variant 3).
CheckOutcome check_binomial_sum(const SequenceSpec& x, int variant,
                                long long a, long long b, long long c,
                                long long d, long long e, long long m,
                                long long k);

} // namespace horadam
