// Truncated Laurent series in t with even exponents and exact coefficients.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

// A series sum_e c_e t^e with all exponents even.  Coefficients are stored
// for e in [min_exp, trunc) in steps of two; exponents below min_exp are
// exactly zero and exponents at or above trunc are unknown.  Every operation
// propagates the tightest truncation that the inputs determine, so a stored
// coefficient is always the exact value of the underlying series.
class TLaurent {
 public:
  // Zero series whose coefficients are known (zero) below `trunc`.
  static TLaurent zero_to(std::int64_t trunc);
  static TLaurent one_to(std::int64_t trunc);
  static TLaurent monomial(std::int64_t exp, const Rational& c,
                           std::int64_t trunc);
  // Coefficients for exponents min_exp, min_exp+2, ...; trunc is implied.
  static TLaurent from_coeffs(std::int64_t min_exp,
                              std::vector<Rational> coeffs);

  TLaurent() : min_(0), trunc_(0) {}

  std::int64_t min_exp() const { return min_; }
  std::int64_t known_to() const { return trunc_; }  // first unknown exponent
  // First exponent with a nonzero coefficient, if any is known.
  std::optional<std::int64_t> valuation() const;
  bool known_zero() const { return c_.empty(); }

  // Exact coefficient of t^e; errors with InvalidTruncation for e >= trunc.
  Rational coeff(std::int64_t e) const;

  TLaurent operator-() const;
  friend TLaurent operator+(const TLaurent& a, const TLaurent& b);
  friend TLaurent operator-(const TLaurent& a, const TLaurent& b);
  friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
  TLaurent& operator+=(const TLaurent& o) { return *this = *this + o; }
  TLaurent& operator-=(const TLaurent& o) { return *this = *this - o; }
  TLaurent& operator*=(const TLaurent& o) { return *this = *this * o; }

  TLaurent scaled(const Rational& c) const;
  TLaurent shifted(std::int64_t k) const;  // multiply by t^k, k even

  // Multiplicative inverse; requires a nonzero coefficient in the known
  // range.  Knowledge shrinks by twice the valuation.
  TLaurent inverse() const;
  // Integer power; negative exponents go through inverse().
  TLaurent pow(std::int64_t e) const;

  // Forgets coefficients at exponents >= new_trunc (never extends knowledge).
  TLaurent truncated(std::int64_t new_trunc) const;

  friend bool operator==(const TLaurent& a, const TLaurent& b) {
    return a.min_ == b.min_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TLaurent& a, const TLaurent& b) {
    return !(a == b);
  }

 private:
  void normalize();  // drop leading zeros, raising min_
  static void check_even(std::int64_t e, const char* what);

  std::int64_t min_;
  std::int64_t trunc_;
  std::vector<Rational> c_;  // size == (trunc_ - min_) / 2
};

}  // namespace gvkit
