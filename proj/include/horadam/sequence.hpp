#pragma once

#include "horadam/rational.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace horadam {

/// Coefficients (p, q) of W_n = p*W_{n-1} + q*W_{n-2}. Backward extension
/// W_{n-2} = (W_n - p*W_{n-1})/q divides by q, so q == 0 is rejected at
/// construction rather than at first negative-index access.
class RecurrencePair {
public:
  RecurrencePair(BigInt p, BigInt q);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  friend bool operator==(const RecurrencePair& x, const RecurrencePair& y) {
    return x.p_ == y.p_ && x.q_ == y.q_;
  }

private:
  BigInt p_;
  BigInt q_;
};

/// One bidirectional second-order recurrence sequence: coefficients plus
/// seeds W_0, W_1. Immutable after construction. Copies share the term
/// cache; concurrent term() calls on shared copies are safe.
class SequenceSpec {
public:
  SequenceSpec(RecurrencePair pair, Rational w0, Rational w1,
               std::string name = {});

  const RecurrencePair& pair() const { return pair_; }
  const Rational& w0() const { return w0_; }
  const Rational& w1() const { return w1_; }
  const std::string& name() const { return name_; }

  bool same_recurrence(const SequenceSpec& other) const {
    return pair_ == other.pair_;
  }

private:
  struct Cache {
    std::mutex mu;
    std::vector<Rational> fwd; // fwd[i] = W_i, seeded with {W_0, W_1}
    std::vector<Rational> bwd; // bwd[i] = W_{-(i+1)}
  };

  RecurrencePair pair_;
  Rational w0_;
  Rational w1_;
  std::string name_;
  std::shared_ptr<Cache> cache_;

  friend Rational term(const SequenceSpec&, long long);
};

/// W_n by memoized recurrence, forward for n >= 0 and backward otherwise.
/// The cache grows a contiguous index interval around [0, 1].
Rational term(const SequenceSpec& spec, long long n);

/// W_n by 2x2 companion-matrix power (O(log|n|) multiplications; the exact
/// matrix inverse handles n < 0). Independent of term(); the two paths
/// cross-validate each other.
Rational term_fast(const SequenceSpec& spec, long long n);

/// The six built-in sequences, by label: F, L, J, j, P, Q. Returned copies
/// share one term cache per label. Unknown labels are rejected.
SequenceSpec builtin(std::string_view name);

/// Shared immutable instance; cheaper than builtin() in hot loops.
const SequenceSpec& builtin_ref(std::string_view name);

const std::vector<std::string>& builtin_names();
bool is_builtin_name(std::string_view name);

/// Value at index -n (n >= 0) from the label's closed form, e.g.
/// sign-flip for F and a 2^-n factor for J. Rejects n < 0.
Rational negative_index_closed_form(std::string_view name, long long n);

} // namespace horadam
