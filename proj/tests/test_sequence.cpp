#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/sequence.hpp"

#include <thread>
#include <vector>

using namespace horadam;

TEST_CASE("builtin table") {
  const SequenceSpec F = builtin("F");
  CHECK(F.pair().p() == 1);
  CHECK(F.pair().q() == 1);
  CHECK(F.w0() == Rational(0));
  CHECK(F.w1() == Rational(1));

  const SequenceSpec L = builtin("L");
  CHECK(L.pair().p() == 1);
  CHECK(L.pair().q() == 1);
  CHECK(L.w0() == Rational(2));
  CHECK(L.w1() == Rational(1));

  const SequenceSpec J = builtin("J");
  CHECK(J.pair().q() == 2);
  CHECK(J.w0() == Rational(0));
  CHECK(J.w1() == Rational(1));

  const SequenceSpec jj = builtin("j");
  CHECK(jj.pair().q() == 2);
  CHECK(jj.w0() == Rational(2));
  CHECK(jj.w1() == Rational(1));

  const SequenceSpec P = builtin("P");
  CHECK(P.pair().p() == 2);
  CHECK(P.pair().q() == 1);
  CHECK(P.w0() == Rational(0));
  CHECK(P.w1() == Rational(1));

  // Pell-Lucas runs 2, 2, 6, 14, 34, ...; with a 1 in the second seed the
  // Q identities and the Q_{-n} closed form all break.
  const SequenceSpec Q = builtin("Q");
  CHECK(Q.pair().p() == 2);
  CHECK(Q.pair().q() == 1);
  CHECK(Q.w0() == Rational(2));
  CHECK(Q.w1() == Rational(2));
  CHECK(term(Q, 4) == Rational(34));

  CHECK(builtin_names().size() == 6);
  CHECK(is_builtin_name("j"));
  CHECK(!is_builtin_name("x"));
  CHECK_THROWS_WITH_AS(builtin("X"), "unknown sequence label: 'X'",
                       std::invalid_argument);
  CHECK_THROWS_AS(builtin("FL"), std::invalid_argument);
}

TEST_CASE("q = 0 is rejected at construction") {
  CHECK_THROWS_AS(RecurrencePair(3, 0), std::invalid_argument);
}

TEST_CASE("spot values") {
  CHECK(term(builtin("F"), 0) == Rational(0));
  CHECK(term(builtin("F"), 10) == Rational(55));
  CHECK(term(builtin("J"), -1) == Rational(1, 2));
  CHECK(term(builtin("P"), -3) == Rational(5));
  CHECK(term(builtin("j"), -4) == Rational(17, 16));
  CHECK(term(builtin("L"), 3) == Rational(4));
  CHECK(term_fast(builtin("F"), 10) == Rational(55));
  CHECK(term_fast(builtin("F"), 0) == Rational(0));
  CHECK(term_fast(builtin("j"), -4) == Rational(17, 16));
}

TEST_CASE("recurrence consistency on both sides of zero") {
  for (const auto& name : builtin_names()) {
    const SequenceSpec s = builtin(name);
    const Rational p{s.pair().p()};
    const Rational q{s.pair().q()};
    for (long long n = -30; n <= 30; ++n)
      CHECK(term(s, n) == p * term(s, n - 1) + q * term(s, n - 2));
  }
}

TEST_CASE("term_fast equals term") {
  for (const auto& name : builtin_names()) {
    const SequenceSpec s = builtin(name);
    for (long long n = -64; n <= 64; ++n)
      CHECK(term_fast(s, n) == term(s, n));
    CHECK(term_fast(s, 1024) == term(s, 1024));
    CHECK(term_fast(s, -1024) == term(s, -1024));
  }

  // Also for a fractional-seed sequence with q != ±1.
  const SequenceSpec s(RecurrencePair(3, -2), Rational(1, 2), Rational(-5, 3));
  for (long long n = -40; n <= 40; ++n)
    CHECK(term_fast(s, n) == term(s, n));
}

TEST_CASE("negative-index closed forms agree with the recurrence") {
  for (const auto& name : builtin_names()) {
    const SequenceSpec s = builtin(name);
    for (long long n = 0; n <= 30; ++n)
      CHECK(negative_index_closed_form(name, n) == term(s, -n));
  }
  CHECK(negative_index_closed_form("F", 5) == Rational(5));
  CHECK(negative_index_closed_form("L", 3) == Rational(-4));
  CHECK(negative_index_closed_form("j", 0) == Rational(2));
  CHECK(negative_index_closed_form("J", 3) == Rational(3, 8));
  CHECK_THROWS_AS(negative_index_closed_form("F", -1), std::invalid_argument);
  CHECK_THROWS_AS(negative_index_closed_form("Z", 1), std::invalid_argument);
}

TEST_CASE("repeated and concurrent term calls observe a pure function") {
  const SequenceSpec s = builtin("P");
  const Rational first = term(s, 25);
  CHECK(term(s, 25) == first);
  CHECK(term(s, 25) == first);

  const SequenceSpec shared(RecurrencePair(1, 3), 2, -1);
  std::vector<std::thread> workers;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&shared, &bad, t] {
      for (long long n = -40; n <= 40; ++n) {
        const Rational via_fast = term_fast(shared, n);
        if (term(shared, n) != via_fast)
          bad[t]++;
      }
    });
  }
  for (auto& w : workers)
    w.join();
  for (const int b : bad)
    CHECK(b == 0);
}

TEST_CASE("copies share one memo") {
  const SequenceSpec a = builtin("F");
  const SequenceSpec b = builtin("F"); // same shared builtin cache
  CHECK(term(a, 200) == term(b, 200));
  CHECK(a.same_recurrence(builtin("L")));
  CHECK(!a.same_recurrence(builtin("P")));
}
