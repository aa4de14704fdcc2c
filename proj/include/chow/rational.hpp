#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "chow/error.hpp"

namespace chow {

using Int = mpz_class;

/// Exact rational number, always kept canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long n, long d) : num_(n), den_(d) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) malformed("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = num_.get_str();
    if (den_ != 1) {
      s += "/";
      s += den_.get_str();
    }
    return s;
  }

private:
  void normalize() {
    if (den_ == 0) malformed("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

/// binom(a, b) for a >= 0; zero when b < 0 or b > a. binom(a, 0) = 1 for any a.
inline Int binomial(long a, long b) {
  if (b == 0) return 1;
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - i + 1);
    r /= i;
  }
  return r;
}

inline Int int_pow(const Int& base, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace chow
