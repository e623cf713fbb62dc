#include "horadam/fuzz.hpp"

#include "horadam/checks.hpp"

#include <chrono>
#include <stdexcept>

namespace horadam {

VerificationReport fuzz_general(uint64_t seed, long long count,
                                long long coeff_bound, long long index_bound) {
  if (count < 1)
    throw std::invalid_argument("fuzz: count must be >= 1");
  if (coeff_bound < 1)
    throw std::invalid_argument("fuzz: coeff_bound must be >= 1");
  if (index_bound < 1)
    throw std::invalid_argument("fuzz: index_bound must be >= 1");

  VerificationReport report;
  report.suite_id = "fuzz";
  report.seed = seed;

  const std::vector<std::string> xx_syms = {"p", "q", "x0", "x1",
                                            "a", "b", "c", "d", "e", "m"};
  const std::vector<std::string> xy_syms = {"p", "q", "x0", "x1", "y0", "y1",
                                            "a", "b", "c", "d", "e", "m"};
  const std::vector<std::string> origin_syms = {"p", "q", "x0", "x1",
                                                "a", "b", "c", "m"};
  const std::vector<std::string> xx_sum_syms = {"p", "q", "x0", "x1", "a",
                                                "b", "c", "d", "e", "m", "k"};
  const std::vector<std::string> xy_sum_syms = {"p",  "q", "x0", "x1", "y0",
                                                "y1", "a", "b",  "c",  "d",
                                                "e",  "m", "k"};

  const auto make_block = [](const char* id,
                             const std::vector<std::string>& symbols) {
    SuiteBlock b;
    b.id = id;
    b.symbols = symbols;
    return b;
  };
  SuiteBlock b_xx = make_block("three-term-xx", xx_syms);
  SuiteBlock b_xy = make_block("three-term-xy-strict", xy_syms);
  SuiteBlock b_origin = make_block("three-term-origin", origin_syms);
  SuiteBlock b_gxy = make_block("geometric-sum-xy", xy_sum_syms);
  SuiteBlock b_gxx[3] = {make_block("geometric-sum-xx-v1", xx_sum_syms),
                         make_block("geometric-sum-xx-v2", xx_sum_syms),
                         make_block("geometric-sum-xx-v3", xx_sum_syms)};
  SuiteBlock b_bin[3] = {make_block("binomial-sum-xx-v1", xx_sum_syms),
                         make_block("binomial-sum-xx-v2", xx_sum_syms),
                         make_block("binomial-sum-xx-v3", xx_sum_syms)};

  Xorshift64Star rng(seed);
  const auto start = std::chrono::steady_clock::now();

  for (long long i = 0; i < count; ++i) {
    // Draw order is part of the reproducibility contract; see README.
    const long long p = rng.uniform(-coeff_bound, coeff_bound);
    long long q = rng.uniform(-coeff_bound, coeff_bound);
    while (q == 0)
      q = rng.uniform(-coeff_bound, coeff_bound);
    const long long x0 = rng.uniform(-coeff_bound, coeff_bound);
    const long long x1 = rng.uniform(-coeff_bound, coeff_bound);
    const long long y0 = rng.uniform(-coeff_bound, coeff_bound);
    const long long y1 = rng.uniform(-coeff_bound, coeff_bound);
    const long long a = rng.uniform(-index_bound, index_bound);
    const long long b = rng.uniform(-index_bound, index_bound);
    const long long c = rng.uniform(-index_bound, index_bound);
    const long long d = rng.uniform(-index_bound, index_bound);
    const long long e = rng.uniform(-index_bound, index_bound);
    const long long m = rng.uniform(-index_bound, index_bound);
    const long long kg = rng.uniform(-index_bound, index_bound);
    const long long kb = rng.uniform(0, index_bound);

    const SequenceSpec x({p, q}, x0, x1);
    const SequenceSpec y({p, q}, y0, y1);

    report.record(b_xx, {p, q, x0, x1, a, b, c, d, e, m},
                  check_three_term_xx(x, a, b, c, d, e, m));
    report.record(b_xy, {p, q, x0, x1, y0, y1, a, b, c, d, e, m},
                  check_three_term_xy(x, y, a, b, c, d, e, m, true));
    report.record(b_origin, {p, q, x0, x1, a, b, c, m},
                  check_three_term_origin(x, a, b, c, m));
    report.record(b_gxy, {p, q, x0, x1, y0, y1, a, b, c, d, e, m, kg},
                  check_weighted_sum_xy(x, y, a, b, c, d, e, m, kg));
    for (int v = 1; v <= 3; ++v)
      report.record(b_gxx[v - 1], {p, q, x0, x1, a, b, c, d, e, m, kg},
                    check_weighted_sum_xx(x, v, a, b, c, d, e, m, kg));
    for (int v = 1; v <= 3; ++v)
      report.record(b_bin[v - 1], {p, q, x0, x1, a, b, c, d, e, m, kb},
                    check_binomial_sum(x, v, a, b, c, d, e, m, kb));
  }

  report.blocks = {std::move(b_xx),     std::move(b_xy),
                   std::move(b_origin), std::move(b_gxy),
                   std::move(b_gxx[0]), std::move(b_gxx[1]),
                   std::move(b_gxx[2]), std::move(b_bin[0]),
                   std::move(b_bin[1]), std::move(b_bin[2])};
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

} // namespace horadam
