#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace horadam {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored normalized: denominator >= 1 and
/// gcd(|numerator|, denominator) == 1. This is the only scalar type the
/// library computes with; floating point is deliberately absent.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  // Normalized representation makes fieldwise equality exact equality.
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const BigInt l = x.num_ * y.den_;
    const BigInt r = y.num_ * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// x^e by repeated squaring; e < 0 inverts first and requires x != 0.
  /// 0^0 is 1, matching the algebraic reading of weighted-sum displays.
  static Rational pow(Rational x, long long e) {
    if (e < 0) {
      if (x.is_zero())
        throw std::domain_error("Rational: zero to a negative power");
      x = Rational(1) / x;
      e = -e;
    }
    Rational acc(1);
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u > 0) {
      if (u & 1)
        acc *= x;
      x *= x;
      u >>= 1;
    }
    return acc;
  }

  /// Serializes as "n" when integral, else "n/d" with d >= 1 and gcd 1;
  /// the report formats rely on this being canonical.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Inverse of str(); also accepts plain integers. Empty optional on junk.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty())
      return std::nullopt;
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(text)));
      BigInt n{std::string(text.substr(0, slash))};
      BigInt d{std::string(text.substr(slash + 1))};
      if (d == 0)
        return std::nullopt;
      return Rational(std::move(n), std::move(d));
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// (-1)^e for any integer e, as an exact rational sign.
inline Rational minus_one_pow(long long e) {
  return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

/// 2^e for any integer e (negative e yields 1/2^|e|).
inline Rational two_pow(long long e) {
  return Rational::pow(Rational(2), e);
}

} // namespace horadam
