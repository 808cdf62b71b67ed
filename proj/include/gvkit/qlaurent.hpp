// Laurent polynomials in the variable Q = e^{it}, exact coefficients.
#pragma once

#include <cstdint>
#include <map>

#include "gvkit/rational.hpp"

namespace gvkit {

// Sparse Laurent polynomial sum_n c_n Q^n.  Zero coefficients are never
// stored, so the default-constructed value is the zero polynomial.
class QLaurent {
 public:
  QLaurent() = default;
  static QLaurent one() { return monomial(0, Rational(1)); }
  static QLaurent monomial(std::int64_t exp, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  std::size_t support_size() const { return c_.size(); }
  std::int64_t min_exp() const;  // error on the zero polynomial
  std::int64_t max_exp() const;

  Rational coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, const Rational& c);
  void add_coeff(std::int64_t n, const Rational& c);

  // Invariant under Q -> 1/Q, i.e. c_n == c_{-n} for all n.
  bool is_symmetric() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent scaled(const Rational& c) const;
  // Substitution Q -> Q^k, k != 0 (k < 0 flips exponents).
  QLaurent stretched(std::int64_t k) const;
  // Nonnegative power, by repeated squaring.
  QLaurent pow(std::uint64_t e) const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) {
    return !(a == b);
  }

  const std::map<std::int64_t, Rational>& terms() const { return c_; }

 private:
  std::map<std::int64_t, Rational> c_;
};

}  // namespace gvkit
