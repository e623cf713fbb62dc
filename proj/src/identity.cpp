#include "horadam/identity.hpp"

#include <stdexcept>

namespace horadam {

LinExpr LinExpr::sym(char s) {
  LinExpr e;
  e.coeffs_[s] = 1;
  return e;
}

LinExpr operator+(LinExpr x, const LinExpr& y) {
  x.constant_ += y.constant_;
  for (const auto& [s, c] : y.coeffs_) {
    const long long merged = x.coeffs_[s] + c;
    if (merged == 0)
      x.coeffs_.erase(s);
    else
      x.coeffs_[s] = merged;
  }
  return x;
}

LinExpr operator-(const LinExpr& x) { return -1 * x; }

LinExpr operator-(LinExpr x, const LinExpr& y) { return x + (-y); }

LinExpr operator*(long long scale, LinExpr x) {
  if (scale == 0)
    return LinExpr(0);
  x.constant_ *= scale;
  for (auto& [s, c] : x.coeffs_)
    c *= scale;
  return x;
}

long long LinExpr::eval(const Assignment& assignment) const {
  long long value = constant_;
  for (const auto& [s, c] : coeffs_) {
    const auto it = assignment.find(s);
    if (it == assignment.end())
      throw std::invalid_argument(std::string("unbound symbol '") + s + "'");
    value += c * it->second;
  }
  return value;
}

void LinExpr::collect_symbols(std::set<char>& out) const {
  for (const auto& [s, c] : coeffs_)
    out.insert(s);
}

Rational eval_monomial(const Monomial& monomial, const Assignment& assignment) {
  Rational value = monomial.coefficient;
  if (monomial.minus_one_power)
    value *= minus_one_pow(monomial.minus_one_power->eval(assignment));
  if (monomial.two_power)
    value *= two_pow(monomial.two_power->eval(assignment));
  for (const auto& [label, index] : monomial.factors)
    value *= term(builtin_ref(label), index.eval(assignment));
  return value;
}

std::vector<char> free_parameters(const IdentityTemplate& tmpl) {
  std::vector<char> out;
  for (const char p : tmpl.parameters) {
    bool defined = false;
    for (const auto& c : tmpl.constraints)
      defined = defined || c.defined == p;
    if (!defined)
      out.push_back(p);
  }
  return out;
}

namespace {

long long value_of(const IdentityTemplate& tmpl, const Assignment& assignment,
                   char symbol) {
  const auto it = assignment.find(symbol);
  if (it == assignment.end())
    throw std::invalid_argument("template '" + tmpl.id +
                                "': missing symbol '" + symbol + "'");
  return it->second;
}

CheckOutcome check_sum_instance(const IdentityTemplate& tmpl,
                                const Assignment& assignment) {
  const SumPattern& sum = *tmpl.sum;
  const long long a = value_of(tmpl, assignment, 'a');
  const long long b = value_of(tmpl, assignment, 'b');
  const long long c = value_of(tmpl, assignment, 'c');
  const long long d = value_of(tmpl, assignment, 'd');
  const long long e = value_of(tmpl, assignment, 'e');
  const long long m = value_of(tmpl, assignment, 'm');
  const long long k = value_of(tmpl, assignment, 'k');
  switch (sum.family) {
  case SumPattern::Family::GeometricXY:
    return check_weighted_sum_xy(builtin_ref(sum.x), builtin_ref(sum.y), a, b,
                                 c, d, e, m, k);
  case SumPattern::Family::GeometricXX:
    return check_weighted_sum_xx(builtin_ref(sum.x), sum.variant, a, b, c, d,
                                 e, m, k);
  case SumPattern::Family::BinomialXX:
    return check_binomial_sum(builtin_ref(sum.x), sum.variant, a, b, c, d, e,
                              m, k);
  }
  throw std::logic_error("unreachable sum family");
}

} // namespace

CheckOutcome check_instance(const IdentityTemplate& tmpl,
                            const Assignment& assignment) {
  for (const char p : tmpl.parameters)
    (void)value_of(tmpl, assignment, p);
  for (const auto& constraint : tmpl.constraints) {
    if (assignment.at(constraint.defined) != constraint.expr.eval(assignment))
      throw std::invalid_argument("template '" + tmpl.id +
                                  "': violated constraint " + constraint.text);
  }
  if (tmpl.k_role && tmpl.k_role->non_negative &&
      value_of(tmpl, assignment, tmpl.k_role->symbol) < 0)
    throw std::invalid_argument(
        "template '" + tmpl.id + "': violated constraint " +
        tmpl.k_role->symbol + std::string(" >= 0"));

  if (tmpl.is_sum())
    return check_sum_instance(tmpl, assignment);

  Rational lhs, rhs;
  for (size_t i = 0; i < tmpl.monomials.size(); ++i) {
    const Rational v = eval_monomial(tmpl.monomials[i], assignment);
    if (i < tmpl.lhs_count)
      lhs += v;
    else
      rhs -= v;
  }
  return compare_exact(std::move(lhs), std::move(rhs));
}

} // namespace horadam
