#pragma once

#include "horadam/report.hpp"

#include <cstdint>

namespace horadam {

/// xorshift64* — the named PRNG behind fuzz runs, chosen so an independent
/// implementation can reproduce reports bit for bit. State update
/// x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 0x2545F4914F6CDD1D.
/// A zero seed is replaced by 0x9E3779B97F4A7C15 (the state must never be
/// zero).
struct Xorshift64Star {
  explicit Xorshift64Star(uint64_t seed)
      : state(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

  uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform draw from [lo, hi] by modulo reduction (bias is irrelevant
  /// here and the simple rule keeps cross-implementations exact).
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<uint64_t>(hi - lo + 1));
  }

  uint64_t state;
};

/// Seeded fuzzing of the general checkers over random sequences: each draw
/// takes one recurrence pair (q != 0), integer seeds for an (X, Y) pair
/// sharing it, one offset tuple and two summation limits, then runs ten
/// checks (single-sequence and strict mixed three-term, the origin-anchored
/// form, and the seven geometric/binomial sum shapes). Reproducible per
/// seed; any Fails is an implementation bug.
VerificationReport fuzz_general(uint64_t seed, long long count,
                                long long coeff_bound, long long index_bound);

} // namespace horadam
