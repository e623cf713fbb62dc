#pragma once

#include "horadam/checks.hpp"
#include "horadam/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace horadam {

/// Symbol -> value binding for one identity instance. Symbols are the
/// single letters a, b, c, d, e, m, n, h, k, u, v, w.
using Assignment = std::map<char, long long>;

/// Linear integer expression over symbols, e.g. d - a or w + 2.
class LinExpr {
public:
  LinExpr() = default;
  LinExpr(long long constant) : constant_(constant) {}
  static LinExpr sym(char s);

  friend LinExpr operator+(LinExpr x, const LinExpr& y);
  friend LinExpr operator-(LinExpr x, const LinExpr& y);
  friend LinExpr operator-(const LinExpr& x);
  friend LinExpr operator*(long long scale, LinExpr x);

  /// Throws std::invalid_argument naming the symbol when one is unbound.
  long long eval(const Assignment& assignment) const;

  void collect_symbols(std::set<char>& out) const;

private:
  long long constant_ = 0;
  std::map<char, long long> coeffs_; // nonzero coefficients only
};

/// One signed product term: coefficient * (-1)^s * 2^t * prod W_{index}.
/// The sign and 2-power exponents are linear expressions over the
/// template's symbols, as are all term indices.
struct Monomial {
  Rational coefficient{1};
  std::optional<LinExpr> minus_one_power;
  std::optional<LinExpr> two_power;
  std::vector<std::pair<std::string, LinExpr>> factors; // (builtin label, index)
};

Rational eval_monomial(const Monomial& monomial, const Assignment& assignment);

/// Which sum-identity shape a sum template instantiates. Sum identities
/// cannot be written as plain monomials (their coefficients are k-th powers
/// of determinant ratios), so the template records the shape and
/// check_instance delegates to the matching checker; the direct checkers
/// and the template route therefore agree by construction.
struct SumPattern {
  enum class Family { GeometricXY, GeometricXX, BinomialXX };
  Family family;
  int variant = 0;  // 1..3 for the XX families
  std::string x;    // builtin label
  std::string y;    // builtin label; empty for XX families
};

/// A symbol whose value is fixed by the others, e.g. w = u + v.
struct Constraint {
  char defined;
  LinExpr expr;
  std::string text;
};

/// Marks a parameter as a summation limit and its admissible sign.
struct KRole {
  char symbol = 'k';
  bool non_negative = false;
};

/// One displayed identity as data: either a list of monomials asserted to
/// sum to zero (the leading lhs_count of them form the display's left
/// side), or a sum pattern. The id is the stable lookup key; label orders
/// entries as displayed.
struct IdentityTemplate {
  std::string id;
  std::string label;
  std::vector<char> parameters;
  std::vector<Monomial> monomials;
  size_t lhs_count = 0;
  std::vector<Constraint> constraints;
  std::optional<SumPattern> sum;
  std::optional<KRole> k_role;
  std::vector<std::string> aliases;
  std::string note;

  bool is_sum() const { return sum.has_value(); }
};

/// Parameters that a grid must enumerate: all except constraint-defined.
std::vector<char> free_parameters(const IdentityTemplate& tmpl);

/// Evaluates one instance exactly. Missing symbols, violated constraints
/// and sign-violating summation limits are rejections (exceptions), not
/// outcomes; vanishing sum denominators yield Skipped(ZeroDenominator).
CheckOutcome check_instance(const IdentityTemplate& tmpl,
                            const Assignment& assignment);

} // namespace horadam
