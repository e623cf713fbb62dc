#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/sums.hpp"

#include <cstdint>

using namespace horadam;

namespace {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
  long long in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % uint64_t(hi - lo + 1));
  }
};

// The straightforward route: sum_convention over pow-per-term. Kept
// independent of eval_geometric_sum's incremental powers.
Rational geometric_by_convention(const SumSpec& s, long long k) {
  return sum_convention(
      [&](long long r) {
        return Rational::pow(s.weight, r) *
               term(s.sequence, s.base_index + s.stride * r);
      },
      k);
}

} // namespace

TEST_CASE("sum_convention basics") {
  const auto id = [](long long r) { return Rational(r); };
  CHECK(sum_convention(id, -1) == Rational(0));
  CHECK(sum_convention(id, -3) == Rational(3)); // -((-2) + (-1))
  CHECK(sum_convention(id, 2) == Rational(3));  // 0 + 1 + 2
  CHECK(sum_convention([](long long) { return Rational(7); }, -1) ==
        Rational(0));
}

TEST_CASE("telescoping pins the convention down") {
  // sum(f, k+1) = sum(f, k) + f(k+1) across the sign change, for many
  // random sequence windows.
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed * 77ull);
    const long long p = rng.in(-5, 5);
    long long q = rng.in(-5, 5);
    if (q == 0)
      q = 1;
    const SequenceSpec s(RecurrencePair(p, q), rng.in(-5, 5), rng.in(-5, 5));
    const long long base = rng.in(-6, 6);
    const long long stride = rng.in(-3, 3);
    const auto f = [&](long long r) { return term(s, base + stride * r); };
    CHECK(sum_convention(f, -1) == Rational(0));
    for (long long k = -10; k <= 10; ++k)
      CHECK(sum_convention(f, k + 1) == sum_convention(f, k) + f(k + 1));
  }
}

TEST_CASE("geometric sum examples") {
  // F_0 + ... + F_4
  CHECK(eval_geometric_sum({builtin("F"), Rational(1), 0, 1}, 4) ==
        Rational(7));
  // weight 0 keeps only r = 0 (0^0 = 1)
  CHECK(eval_geometric_sum({builtin("L"), Rational(0), 5, 3}, 3) ==
        term(builtin("L"), 5));
  // empty conventional sum
  CHECK(eval_geometric_sum({builtin("P"), Rational(2), 1, 2}, -1) ==
        Rational(0));
  CHECK_THROWS_AS(eval_geometric_sum({builtin("P"), Rational(0), 1, 2}, -2),
                  std::domain_error);
}

TEST_CASE("geometric sum agrees with the convention route") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed * 1315423911ull);
    const SequenceSpec s(RecurrencePair(rng.in(-4, 4), rng.in(1, 4)),
                         rng.in(-4, 4), rng.in(-4, 4));
    Rational w(rng.in(-6, 6), rng.in(1, 4));
    const SumSpec spec{s, w, rng.in(-5, 5), rng.in(-3, 3)};
    for (long long k = -6; k <= 8; ++k) {
      if (w.is_zero() && k <= -2)
        continue;
      CHECK(eval_geometric_sum(spec, k) == geometric_by_convention(spec, k));
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

  // Pascal recursion
  for (long long k = 1; k <= 25; ++k)
    for (long long r = 0; r <= k; ++r)
      CHECK(binomial(k, r) == binomial(k - 1, r - 1) + binomial(k - 1, r));
}

TEST_CASE("binomial sum examples") {
  // single term C(0,0) w^0
  CHECK(eval_binomial_sum({builtin("Q"), Rational(9, 7), 4, 5}, 0) ==
        term(builtin("Q"), 4));
  // weight 1, stride 0: binomial theorem gives 2^n W_m
  CHECK(eval_binomial_sum({builtin("L"), Rational(1), 3, 0}, 10) ==
        Rational(1024) * term(builtin("L"), 3));
  // F_0 + 3F_1 + 3F_2 + F_3
  CHECK(eval_binomial_sum({builtin("F"), Rational(1), 0, 1}, 3) ==
        Rational(8));
  CHECK_THROWS_AS(eval_binomial_sum({builtin("F"), Rational(1), 0, 1}, -1),
                  std::invalid_argument);
}

TEST_CASE("binomial sum agrees with a brute-force oracle") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed * 2654435761ull);
    const SequenceSpec s(RecurrencePair(rng.in(-4, 4), rng.in(1, 4)),
                         rng.in(-4, 4), rng.in(-4, 4));
    const Rational w(rng.in(-6, 6), rng.in(1, 4));
    const SumSpec spec{s, w, rng.in(-5, 5), rng.in(-3, 3)};
    for (long long k = 0; k <= 8; ++k) {
      Rational brute;
      for (long long r = 0; r <= k; ++r)
        brute += Rational(binomial(k, r)) * Rational::pow(w, r) *
                 term(s, spec.base_index + spec.stride * r);
      CHECK(eval_binomial_sum(spec, k) == brute);
    }
  }
}
