// Exact rational arithmetic, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gvkit/errors.hpp"

namespace gvkit {

using Integer = mpz_class;

// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(const Integer& n) : q_(n) {}           // NOLINT(runtime/explicit)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Parses "p" or "p/q" (q > 0 after canonicalization).
  static Rational from_string(const std::string& s);
  std::string to_string() const { return q_.get_str(); }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  // Integer power; e < 0 requires a nonzero base.
  Rational pow_int(long e) const;

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  double to_double() const { return q_.get_d(); }

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;
};

}  // namespace gvkit
