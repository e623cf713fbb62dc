#include "horadam/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace horadam {

namespace {

const LinExpr A = LinExpr::sym('a');
const LinExpr B = LinExpr::sym('b');
const LinExpr C = LinExpr::sym('c');
const LinExpr D = LinExpr::sym('d');
const LinExpr E = LinExpr::sym('e');
const LinExpr M = LinExpr::sym('m');
const LinExpr N = LinExpr::sym('n');
const LinExpr H = LinExpr::sym('h');
const LinExpr K = LinExpr::sym('k');
const LinExpr U = LinExpr::sym('u');
const LinExpr V = LinExpr::sym('v');
const LinExpr W = LinExpr::sym('w');

/// Fluent monomial builder; keeps the entry tables readable.
struct Mono {
  Monomial m;
  explicit Mono(Rational coefficient = Rational(1)) {
    m.coefficient = std::move(coefficient);
  }
  Mono&& sign(LinExpr e) && {
    m.minus_one_power = std::move(e);
    return std::move(*this);
  }
  Mono&& two(LinExpr e) && {
    m.two_power = std::move(e);
    return std::move(*this);
  }
  Mono&& f(std::string label, LinExpr index) && {
    m.factors.emplace_back(std::move(label), std::move(index));
    return std::move(*this);
  }
  operator Monomial() && { return std::move(m); }
};

class Builder {
public:
  explicit Builder(std::vector<IdentityTemplate>& out) : out_(out) {}

  IdentityTemplate& add(std::string id, std::string params,
                        std::vector<Monomial> monomials, size_t lhs_count,
                        std::string note = {}) {
    IdentityTemplate t;
    t.id = std::move(id);
    ++serial_;
    t.label = (serial_ < 10 ? "E00" : serial_ < 100 ? "E0" : "E") +
              std::to_string(serial_);
    t.parameters.assign(params.begin(), params.end());
    t.monomials = std::move(monomials);
    t.lhs_count = lhs_count;
    t.note = std::move(note);
    out_.push_back(std::move(t));
    return out_.back();
  }

  IdentityTemplate& add_sum(std::string id, SumPattern sum, bool k_non_negative,
                            std::string note = {}) {
    IdentityTemplate& t = add(std::move(id), "abcdemk", {}, 0, std::move(note));
    t.sum = std::move(sum);
    t.k_role = KRole{'k', k_non_negative};
    return t;
  }

  // (X_{d-a} Y_{e-b} - X_{e-a} Y_{d-b}) X_{m-c}
  //   = (X_{d-c} Y_{e-b} - X_{e-c} Y_{d-b}) X_{m-a}
  //   + (X_{d-a} X_{e-c} - X_{e-a} X_{d-c}) Y_{m-b}
  void three_term(std::string id, const std::string& x, const std::string& y,
                  std::string note = {}) {
    add(std::move(id), "abcdem",
        {
            Mono().f(x, D - A).f(y, E - B).f(x, M - C),
            Mono(-1).f(x, E - A).f(y, D - B).f(x, M - C),
            Mono(-1).f(x, D - C).f(y, E - B).f(x, M - A),
            Mono().f(x, E - C).f(y, D - B).f(x, M - A),
            Mono(-1).f(x, D - A).f(x, E - C).f(y, M - B),
            Mono().f(x, E - A).f(x, D - C).f(y, M - B),
        },
        2, std::move(note));
  }

  // (X_{d-c} Y_{e-b} - X_{e-c} Y_{d-b}) X_{c-a}
  //   = (X_{e-a} X_{d-c} - X_{d-a} X_{e-c}) Y_{c-b}
  void det_exchange_xy(std::string id, const std::string& x,
                       const std::string& y, std::string note = {}) {
    add(std::move(id), "abcde",
        {
            Mono().f(x, D - C).f(y, E - B).f(x, C - A),
            Mono(-1).f(x, E - C).f(y, D - B).f(x, C - A),
            Mono(-1).f(x, E - A).f(x, D - C).f(y, C - B),
            Mono().f(x, D - A).f(x, E - C).f(y, C - B),
        },
        2, std::move(note));
  }

  // (X_{d-a} X_{e-b} - X_{e-a} X_{d-b}) X_{b-c}
  //   = (X_{d-c} X_{e-b} - X_{e-c} X_{d-b}) X_{b-a}
  void det_exchange_xx(std::string id, const std::string& x,
                       std::string note = {}) {
    add(std::move(id), "abcde",
        {
            Mono().f(x, D - A).f(x, E - B).f(x, B - C),
            Mono(-1).f(x, E - A).f(x, D - B).f(x, B - C),
            Mono(-1).f(x, D - C).f(x, E - B).f(x, B - A),
            Mono().f(x, E - C).f(x, D - B).f(x, B - A),
        },
        2, std::move(note));
  }

private:
  std::vector<IdentityTemplate>& out_;
  int serial_ = 0;
};

// Set on monomials whose 2-power only appears in the Jacobsthal entries.
std::optional<LinExpr> jac(bool enable, LinExpr e) {
  if (enable)
    return e;
  return std::nullopt;
}

void build_entries(std::vector<IdentityTemplate>& out) {
  Builder cat(out);

  // --- mixed-pair three-term identities, E001-E006 ---
  cat.three_term("three-term-FL", "F", "L");
  cat.three_term("three-term-LF", "L", "F");
  cat.three_term("three-term-Jj", "J", "j");
  cat.three_term("three-term-jJ", "j", "J");
  cat.three_term("three-term-PQ", "P", "Q");
  cat.three_term("three-term-QP", "Q", "P");

  // --- m = c collapse of the mixed three-term identities, E007-E009 ---
  cat.det_exchange_xy("det-exchange-FL", "F", "L", "three-term-FL at m = c");
  cat.det_exchange_xy("det-exchange-Jj", "J", "j", "three-term-Jj at m = c");
  cat.det_exchange_xy("det-exchange-PQ", "P", "Q", "three-term-PQ at m = c");

  // --- det-exchange at e = a, rewritten by index negation, E010-E012 ---
  // X_{d-c} Y_{a-b} - X_{a-c} Y_{d-b} = (-1)^{a-c} [2^{a-c}] X_{d-a} Y_{c-b}
  for (auto [id, x, y, p2] :
       {std::tuple{"shift-product-FL", "F", "L", false},
        std::tuple{"shift-product-Jj", "J", "j", true},
        std::tuple{"shift-product-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "abcd",
                      {
                          Mono().f(x, D - C).f(y, A - B),
                          Mono(-1).f(x, A - C).f(y, D - B),
                          Mono(-1).sign(A - C).f(x, D - A).f(y, C - B),
                      },
                      2, std::string("det-exchange-") + x + y + " at e = a");
    t.monomials[2].two_power = jac(p2, A - C);
  }

  // --- three-parameter form of the previous, E013-E015 ---
  // X_{n+h} Y_{n+k} - X_n Y_{n+h+k} = (-1)^n [2^n] X_h Y_k
  for (auto [id, x, y, p2] :
       {std::tuple{"product-diff-FL", "F", "L", false},
        std::tuple{"product-diff-Jj", "J", "j", true},
        std::tuple{"product-diff-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "hkn",
                      {
                          Mono().f(x, N + H).f(y, N + K),
                          Mono(-1).f(x, N).f(y, N + H + K),
                          Mono(-1).sign(N).f(x, H).f(y, K),
                      },
                      2,
                      std::string("shift-product-") + x + y +
                          " with a = d-h, b = d-n-h-k, c = d-n-h");
    t.monomials[2].two_power = jac(p2, N);
  }

  // --- shift-product at c = b, E016-E018 ---
  // X_{d-b} Y_{a-b} - X_{a-b} Y_{d-b} = (-1)^{a-b} 2 X_{d-a}   (2^{a-b+1} for Jj)
  for (auto [id, x, y, p2] :
       {std::tuple{"cross-diff-shifted-FL", "F", "L", false},
        std::tuple{"cross-diff-shifted-Jj", "J", "j", true},
        std::tuple{"cross-diff-shifted-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "abd",
                      {
                          Mono().f(x, D - B).f(y, A - B),
                          Mono(-1).f(x, A - B).f(y, D - B),
                          Mono(-2).sign(A - B).f(x, D - A),
                      },
                      2, std::string("shift-product-") + x + y + " at c = b");
    if (p2) {
      t.monomials[2].coefficient = Rational(-1);
      t.monomials[2].two_power = A - B + LinExpr(1);
    }
  }

  // --- two-parameter form, E019-E021 ---
  // X_u Y_v - X_v Y_u = (-1)^v 2 X_{u-v}   (2^{v+1} for Jj)
  for (auto [id, x, y, p2] : {std::tuple{"cross-diff-FL", "F", "L", false},
                              std::tuple{"cross-diff-Jj", "J", "j", true},
                              std::tuple{"cross-diff-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "uv",
                      {
                          Mono().f(x, U).f(y, V),
                          Mono(-1).f(x, V).f(y, U),
                          Mono(-2).sign(V).f(x, U - V),
                      },
                      2,
                      std::string("cross-diff-shifted-") + x + y +
                          " with u = d-b, v = a-b");
    if (p2) {
      t.monomials[2].coefficient = Rational(-1);
      t.monomials[2].two_power = V + LinExpr(1);
    }
  }

  // --- shift-product at b = 0, c = -a, E022-E024 ---
  // X_{d+a} - (-1)^a [2^a] X_{d-a} = X_a Y_d
  for (auto [id, x, y, p2] : {std::tuple{"addition-odd-F", "F", "L", false},
                              std::tuple{"addition-odd-J", "J", "j", true},
                              std::tuple{"addition-odd-P", "P", "Q", false}}) {
    auto& t = cat.add(id, "ad",
                      {
                          Mono().f(x, D + A),
                          Mono(-1).sign(A).f(x, D - A),
                          Mono(-1).f(x, A).f(y, D),
                      },
                      2, std::string("shift-product-") + x + y +
                             " at b = 0, c = -a");
    t.monomials[1].two_power = jac(p2, A);
  }

  // --- Catalan identities, E025-E027 ---
  // X_d^2 - X_{d-a} X_{d+a} = (-1)^{d-a} [2^{d-a}] X_a^2
  for (auto [id, x, p2] : {std::tuple{"catalan-F", "F", false},
                           std::tuple{"catalan-J", "J", true},
                           std::tuple{"catalan-P", "P", false}}) {
    auto& t = cat.add(id, "ad",
                      {
                          Mono().f(x, D).f(x, D),
                          Mono(-1).f(x, D - A).f(x, D + A),
                          Mono(-1).sign(D - A).f(x, A).f(x, A),
                      },
                      2,
                      std::string("det-exchange-") + x +
                          (p2 ? "j" : x[0] == 'F' ? "L" : "Q") +
                          " at b = c = 0, e = a + d");
    t.monomials[2].two_power = jac(p2, D - A);
  }

  // --- det-exchange at d = 0, c = -a, E028-E030 ---
  // X_e Y_{a+b} + (-1)^b [2^b] X_a Y_{e-b} = X_{e+a} Y_b
  for (auto [id, x, y, p2] :
       {std::tuple{"cross-addition-FL", "F", "L", false},
        std::tuple{"cross-addition-Jj", "J", "j", true},
        std::tuple{"cross-addition-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "abe",
                      {
                          Mono().f(x, E).f(y, A + B),
                          Mono().sign(B).f(x, A).f(y, E - B),
                          Mono(-1).f(x, E + A).f(y, B),
                      },
                      2, std::string("det-exchange-") + x + y +
                             " at d = 0, c = -a");
    t.monomials[1].two_power = jac(p2, B);
  }

  // --- companion addition formulas, E031-E033 ---
  // Y_{a+b} + (-1)^b [2^b] Y_{a-b} = Y_a Y_b
  for (auto [id, y, p2] : {std::tuple{"addition-even-L", "L", false},
                           std::tuple{"addition-even-j", "j", true},
                           std::tuple{"addition-even-Q", "Q", false}}) {
    std::string note = std::string("cross-addition at e = a, sequence ") + y;
    if (y[0] == 'Q')
      note += "; erratum: the variant with L_b on the right fails at"
              " a = 1, b = 1; the Q_a Q_b form is the one that holds";
    auto& t = cat.add(id, "ab",
                      {
                          Mono().f(y, A + B),
                          Mono().sign(B).f(y, A - B),
                          Mono(-1).f(y, A).f(y, B),
                      },
                      2, std::move(note));
    t.monomials[1].two_power = jac(p2, B);
  }

  // --- symmetric cross sums, E034-E036 ---
  // X_e Y_a + X_a Y_e = 2 X_{e+a}
  for (auto [id, x, y] : {std::tuple{"symmetric-sum-FL", "F", "L"},
                          std::tuple{"symmetric-sum-Jj", "J", "j"},
                          std::tuple{"symmetric-sum-PQ", "P", "Q"}}) {
    cat.add(id, "ae",
            {
                Mono().f(x, E).f(y, A),
                Mono().f(x, A).f(y, E),
                Mono(-2).f(x, E + A),
            },
            2, std::string("cross-addition-") + x + y + " at b = 0");
  }

  // --- cross difference at e = b, E037-E039 ---
  // X_{a+b} Y_b - X_b Y_{a+b} = (-1)^b 2 X_a   (2^{b+1} for Jj)
  for (auto [id, x, y, p2] :
       {std::tuple{"cross-diff-offset-FL", "F", "L", false},
        std::tuple{"cross-diff-offset-Jj", "J", "j", true},
        std::tuple{"cross-diff-offset-PQ", "P", "Q", false}}) {
    auto& t = cat.add(id, "ab",
                      {
                          Mono().f(x, A + B).f(y, B),
                          Mono(-1).f(x, B).f(y, A + B),
                          Mono(-2).sign(B).f(x, A),
                      },
                      2, std::string("cross-addition-") + x + y + " at e = b");
    if (p2) {
      t.monomials[2].coefficient = Rational(-1);
      t.monomials[2].two_power = B + LinExpr(1);
    }
  }

  // --- double-argument identities, E040-E042 ---
  // Y_{2u} + (-1)^u 2 = Y_u^2   (2^{u+1} for j)
  for (auto [id, y, p2] : {std::tuple{"double-L", "L", false},
                           std::tuple{"double-j", "j", true},
                           std::tuple{"double-Q", "Q", false}}) {
    auto& t = cat.add(id, "u",
                      {
                          Mono().f(y, 2 * U),
                          Mono(2).sign(U),
                          Mono(-1).f(y, U).f(y, U),
                      },
                      2, "det-exchange at e = 2u+b, a = d = b, c = b+u");
    if (p2) {
      t.monomials[1].coefficient = Rational(1);
      t.monomials[1].two_power = U + LinExpr(1);
    }
  }

  // --- single-sequence three-term identities, E043-E048 ---
  cat.three_term("three-term-FF", "F", "F");
  cat.three_term("three-term-LL", "L", "L");
  cat.three_term("three-term-JJ", "J", "J");
  cat.three_term("three-term-jj", "j", "j");
  cat.three_term("three-term-PP", "P", "P");
  cat.three_term("three-term-QQ", "Q", "Q");

  // --- m = b collapse, E049-E051 ---
  cat.det_exchange_xx("det-exchange-FF", "F", "three-term-FF at m = b");
  cat.det_exchange_xx("det-exchange-JJ", "J", "three-term-JJ at m = b");
  cat.det_exchange_xx("det-exchange-PP", "P", "three-term-PP at m = b");

  // --- even addition formulas, E052-E054 ---
  // X_{d+a} + (-1)^a [2^a] X_{d-a} = X_d Y_a
  for (auto [id, x, y, p2] : {std::tuple{"addition-even-F", "F", "L", false},
                              std::tuple{"addition-even-J", "J", "j", true},
                              std::tuple{"addition-even-P", "P", "Q", false}}) {
    auto& t = cat.add(id, "ad",
                      {
                          Mono().f(x, D + A),
                          Mono().sign(A).f(x, D - A),
                          Mono(-1).f(x, D).f(y, A),
                      },
                      2, std::string("det-exchange-") + x + x +
                             " at b = 0, c = -a, e = a");
    t.monomials[1].two_power = jac(p2, A);
  }

  // --- det-exchange-xx at d = a, E055-E057 ---
  // X_{a-c} X_{e-b} - X_{e-c} X_{a-b} = (-1)^{a-b} [2^{a-b}] X_{e-a} X_{b-c}
  for (auto [id, x, p2] : {std::tuple{"shift-product-FF", "F", false},
                           std::tuple{"shift-product-JJ", "J", true},
                           std::tuple{"shift-product-PP", "P", false}}) {
    auto& t = cat.add(id, "abce",
                      {
                          Mono().f(x, A - C).f(x, E - B),
                          Mono(-1).f(x, E - C).f(x, A - B),
                          Mono(-1).sign(A - B).f(x, E - A).f(x, B - C),
                      },
                      2, std::string("det-exchange-") + x + x + " at d = a");
    t.monomials[2].two_power = jac(p2, A - B);
  }

  // --- three-parameter product difference, E058-E060 ---
  // X_{n+h} X_{n+k} - X_n X_{n+h+k} = (-1)^n [2^n] X_h X_k
  for (auto [id, x, p2] : {std::tuple{"product-diff-FF", "F", false},
                           std::tuple{"product-diff-JJ", "J", true},
                           std::tuple{"product-diff-PP", "P", false}}) {
    auto& t = cat.add(id, "hkn",
                      {
                          Mono().f(x, N + H).f(x, N + K),
                          Mono(-1).f(x, N).f(x, N + H + K),
                          Mono(-1).sign(N).f(x, H).f(x, K),
                      },
                      2,
                      std::string("shift-product-") + x + x +
                          " with a = e+h, b = e-n-k, c = e-n");
    t.monomials[2].two_power = jac(p2, N);
  }

  // --- three-square identities, offset form, E061-E063 ---
  // (-1)^{a-b} [2^{b-a}] Y_{a-b}^2 + (-1)^{b-c} [2^{c-b}] Y_{b-c}^2
  //   + (-1)^{a-c} [2^{c-a}] Y_{a-c}^2
  //   = (-1)^{a-c} [2^{c-a}] Y_{a-b} Y_{b-c} Y_{a-c} + 4
  for (auto [id, y, p2] : {std::tuple{"three-square-L-offsets", "L", false},
                           std::tuple{"three-square-j-offsets", "j", true},
                           std::tuple{"three-square-Q-offsets", "Q", false}}) {
    auto& t = cat.add(id, "abc",
                      {
                          Mono().sign(A - B).f(y, A - B).f(y, A - B),
                          Mono().sign(B - C).f(y, B - C).f(y, B - C),
                          Mono().sign(A - C).f(y, A - C).f(y, A - C),
                          Mono(-1).sign(A - C).f(y, A - B).f(y, B - C).f(y, A - C),
                          Mono(-4),
                      },
                      3, "origin-anchored three-term at m = c");
    if (p2) {
      t.monomials[0].two_power = B - A;
      t.monomials[1].two_power = C - B;
      t.monomials[2].two_power = C - A;
      t.monomials[3].two_power = C - A;
    }
  }

  // --- three-square identities, u + v = w form, E064-E066 ---
  {
    auto& tL = cat.add("three-square-L", "uvw",
                       {
                           Mono().sign(U).f("L", U).f("L", U),
                           Mono().sign(V).f("L", V).f("L", V),
                           Mono().sign(W).f("L", W).f("L", W),
                           Mono(-1).sign(W).f("L", U).f("L", V).f("L", W),
                           Mono(-4),
                       },
                       3, "three-square-L-offsets with u = a-b, v = b-c");
    tL.constraints = {{'w', U + V, "w = u + v"}};

    auto& tj = cat.add("three-square-j", "uvw",
                       {
                           Mono().sign(U).two(V).f("j", U).f("j", U),
                           Mono().sign(V).two(U).f("j", V).f("j", V),
                           Mono().sign(W).f("j", W).f("j", W),
                           Mono(-1).sign(W).f("j", U).f("j", V).f("j", W),
                           Mono(-1).two(W + LinExpr(2)),
                       },
                       3, "three-square-j-offsets scaled by 2^w");
    tj.constraints = {{'w', U + V, "w = u + v"}};

    auto& tQ = cat.add("three-square-Q", "uvw",
                       {
                           Mono().sign(U).f("Q", U).f("Q", U),
                           Mono().sign(V).f("Q", V).f("Q", V),
                           Mono().sign(W).f("Q", W).f("Q", W),
                           Mono(-1).sign(W).f("Q", U).f("Q", V).f("Q", W),
                           Mono(-4),
                       },
                       3, "three-square-Q-offsets with u = a-b, v = b-c");
    tQ.constraints = {{'w', U + V, "w = u + v"}};
  }

  // --- geometric-weighted sums, mixed pairs, E067-E072 ---
  for (auto [id, x, y] : {std::tuple{"weighted-sum-FL", "F", "L"},
                          std::tuple{"weighted-sum-LF", "L", "F"},
                          std::tuple{"weighted-sum-Jj", "J", "j"},
                          std::tuple{"weighted-sum-jJ", "j", "J"},
                          std::tuple{"weighted-sum-PQ", "P", "Q"},
                          std::tuple{"weighted-sum-QP", "Q", "P"}}) {
    cat.add_sum(id, {SumPattern::Family::GeometricXY, 0, x, y}, false);
  }

  // --- geometric-weighted sums, single sequence, E073-E090 ---
  for (const char* x : {"F", "L", "J", "j", "P", "Q"}) {
    for (int v = 1; v <= 3; ++v) {
      cat.add_sum("weighted-sum-" + std::string(x) + "-v" + std::to_string(v),
                  {SumPattern::Family::GeometricXX, v, x, ""}, false);
    }
  }

  // --- binomial-weighted sums, E091-E108 ---
  for (const char* x : {"F", "L", "J", "j", "P", "Q"}) {
    for (int v = 1; v <= 3; ++v) {
      cat.add_sum("binomial-sum-" + std::string(x) + "-v" + std::to_string(v),
                  {SumPattern::Family::BinomialXX, v, x, ""}, true,
                  "stated for positive upper limits; the k = 0 boundary also "
                  "holds and is accepted");
    }
  }
}

void add_aliases(std::vector<IdentityTemplate>& entries) {
  const std::map<std::string, std::string> aliases = {
      {"catalan-J", "jacobsthal-catalan"},
      {"double-L", "lucas-double"},
      {"product-diff-FF", "fib-product"},
  };
  for (auto& t : entries) {
    const auto it = aliases.find(t.id);
    if (it != aliases.end())
      t.aliases.push_back(it->second);
  }
}

} // namespace

namespace {

// Construction-time sanity: every expression references only declared
// parameters, the left-side split is in range, sum entries use the fixed
// parameter tuple.
void validate_entry(const IdentityTemplate& t) {
  std::set<char> used;
  for (const auto& m : t.monomials) {
    if (m.minus_one_power)
      m.minus_one_power->collect_symbols(used);
    if (m.two_power)
      m.two_power->collect_symbols(used);
    for (const auto& [label, index] : m.factors) {
      (void)builtin_ref(label);
      index.collect_symbols(used);
    }
  }
  for (const auto& c : t.constraints)
    c.expr.collect_symbols(used);
  const std::set<char> declared(t.parameters.begin(), t.parameters.end());
  for (const char s : used)
    if (!declared.count(s))
      throw std::logic_error("catalog entry '" + t.id +
                             "' references undeclared symbol '" + s + "'");
  if (t.lhs_count > t.monomials.size())
    throw std::logic_error("catalog entry '" + t.id + "' has bad lhs split");
  if (t.is_sum() &&
      std::string(t.parameters.begin(), t.parameters.end()) != "abcdemk")
    throw std::logic_error("catalog entry '" + t.id +
                           "' has unexpected sum parameters");
}

} // namespace

Catalog::Catalog() {
  build_entries(entries_);
  add_aliases(entries_);
  for (size_t i = 0; i < entries_.size(); ++i) {
    validate_entry(entries_[i]);
    if (!index_.emplace(entries_[i].id, i).second)
      throw std::logic_error("duplicate catalog id: " + entries_[i].id);
    for (const auto& alias : entries_[i].aliases)
      if (!index_.emplace(alias, i).second)
        throw std::logic_error("duplicate catalog alias: " + alias);
  }
}

const IdentityTemplate* Catalog::find(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end())
    return nullptr;
  return &entries_[it->second];
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& t : entries_)
    out.push_back(t.id);
  return out;
}

std::string Catalog::manifest() const {
  std::ostringstream os;
  os << "label | id | kind | parameters | constraints | note\n";
  for (const auto& t : entries_) {
    os << t.label << " | " << t.id << " | ";
    if (!t.is_sum())
      os << "product";
    else if (t.sum->family == SumPattern::Family::BinomialXX)
      os << "binomial-sum";
    else
      os << "geometric-sum";
    os << " | ";
    for (size_t i = 0; i < t.parameters.size(); ++i)
      os << (i ? "," : "") << t.parameters[i];
    os << " | ";
    bool first = true;
    for (const auto& c : t.constraints) {
      os << (first ? "" : "; ") << c.text;
      first = false;
    }
    if (t.k_role) {
      os << (first ? "" : "; ") << t.k_role->symbol
         << (t.k_role->non_negative ? " >= 0 (sum limit)" : " (sum limit)");
      first = false;
    }
    if (first)
      os << "-";
    os << " | " << (t.note.empty() ? "-" : t.note) << "\n";
  }
  return os.str();
}

const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

} // namespace horadam
