#include "horadam/sequence.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace horadam {

RecurrencePair::RecurrencePair(BigInt p, BigInt q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (q_ == 0)
    throw std::invalid_argument(
        "RecurrencePair: q must be nonzero (backward extension divides by q)");
}

SequenceSpec::SequenceSpec(RecurrencePair pair, Rational w0, Rational w1,
                           std::string name)
    : pair_(std::move(pair)), w0_(std::move(w0)), w1_(std::move(w1)),
      name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  cache_->fwd = {w0_, w1_};
}

Rational term(const SequenceSpec& spec, long long n) {
  auto& cache = *spec.cache_;
  const Rational p{spec.pair_.p()};
  const Rational q{spec.pair_.q()};

  std::scoped_lock lock(cache.mu);
  if (n >= 0) {
    const auto idx = static_cast<size_t>(n);
    while (cache.fwd.size() <= idx) {
      const size_t i = cache.fwd.size();
      cache.fwd.push_back(p * cache.fwd[i - 1] + q * cache.fwd[i - 2]);
    }
    return cache.fwd[idx];
  }
  const auto idx = static_cast<size_t>(-(n + 1)); // bwd[idx] = W_n
  while (cache.bwd.size() <= idx) {
    const size_t i = cache.bwd.size();
    // W_{-(i+1)} = (W_{-i+1} - p*W_{-i}) / q
    const Rational& up2 = (i < 2) ? cache.fwd[1 - i] : cache.bwd[i - 2];
    const Rational& up1 = (i < 1) ? cache.fwd[0] : cache.bwd[i - 1];
    cache.bwd.push_back((up2 - p * up1) / q);
  }
  return cache.bwd[idx];
}

namespace {

struct Mat2 {
  Rational a, b, c, d; // row-major [[a, b], [c, d]]
};

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(Mat2 base, unsigned long long e) {
  Mat2 acc{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

} // namespace

Rational term_fast(const SequenceSpec& spec, long long n) {
  const Rational p{spec.pair().p()};
  const Rational q{spec.pair().q()};
  // [W_{k+1}, W_k]^T = M^k [W_1, W_0]^T with M = [[p, q], [1, 0]].
  // M^-1 = [[0, 1], [1/q, -p/q]] (det M = -q, exact because q != 0).
  Mat2 base;
  unsigned long long e;
  if (n >= 0) {
    base = {p, q, 1, 0};
    e = static_cast<unsigned long long>(n);
  } else {
    base = {0, 1, Rational(1) / q, -(p / q)};
    e = ~static_cast<unsigned long long>(n) + 1;
  }
  const Mat2 acc = mat_pow(base, e);
  return acc.c * spec.w1() + acc.d * spec.w0();
}

namespace {

const std::array<SequenceSpec, 6>& builtin_table() {
  static const std::array<SequenceSpec, 6> table = {
      SequenceSpec({1, 1}, 0, 1, "F"),
      SequenceSpec({1, 1}, 2, 1, "L"),
      SequenceSpec({1, 2}, 0, 1, "J"),
      SequenceSpec({1, 2}, 2, 1, "j"),
      SequenceSpec({2, 1}, 0, 1, "P"),
      // Pell-Lucas: 2, 2, 6, 14, 34, ... Seeds (2, 2) are what every
      // displayed Q identity and the closed form Q_{-n} = (-1)^n Q_n need.
      SequenceSpec({2, 1}, 2, 2, "Q"),
  };
  return table;
}

int builtin_index(std::string_view name) {
  if (name.size() == 1) {
    switch (name[0]) {
    case 'F': return 0;
    case 'L': return 1;
    case 'J': return 2;
    case 'j': return 3;
    case 'P': return 4;
    case 'Q': return 5;
    default: break;
    }
  }
  return -1;
}

} // namespace

const SequenceSpec& builtin_ref(std::string_view name) {
  const int idx = builtin_index(name);
  if (idx < 0)
    throw std::invalid_argument("unknown sequence label: '" +
                                std::string(name) + "'");
  return builtin_table()[static_cast<size_t>(idx)];
}

SequenceSpec builtin(std::string_view name) { return builtin_ref(name); }

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"F", "L", "J", "j", "P", "Q"};
  return names;
}

bool is_builtin_name(std::string_view name) {
  return builtin_index(name) >= 0;
}

Rational negative_index_closed_form(std::string_view name, long long n) {
  if (n < 0)
    throw std::invalid_argument("negative_index_closed_form: n must be >= 0");
  const SequenceSpec& spec = builtin_ref(name);
  const Rational wn = term(spec, n);
  switch (name[0]) {
  case 'F':
  case 'P':
    return minus_one_pow(n - 1) * wn;
  case 'L':
  case 'Q':
    return minus_one_pow(n) * wn;
  case 'J':
    return minus_one_pow(n - 1) * two_pow(-n) * wn;
  default: // 'j'
    return minus_one_pow(n) * two_pow(-n) * wn;
  }
}

} // namespace horadam
