#include "gvkit/expansions.hpp"

#include <string>
#include <vector>

namespace gvkit {

namespace {

// (2 sin(kt/2))^2 = 2 - 2 cos(kt) over exponents [2, trunc).
TLaurent sin_sq_to(long k, std::int64_t trunc) {
  if (k < 1) fail(ErrorKind::DomainError, "multiple-cover index k must be >= 1");
  if (trunc <= 2) return TLaurent::zero_to(std::min<std::int64_t>(trunc, 2));
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>((trunc - 2) / 2));
  Integer ksq = Integer(k) * k;
  Integer kpow = ksq;   // k^{2m}
  Integer fact = 2;     // (2m)!
  int sign = 1;         // (-1)^{m+1}
  for (std::int64_t m = 1; 2 * m < trunc; ++m) {
    c.emplace_back(Integer(sign * 2) * kpow, fact);
    kpow *= ksq;
    fact *= 2 * m + 1;
    fact *= 2 * m + 2;
    sign = -sign;
  }
  return TLaurent::from_coeffs(2, std::move(c));
}

}  // namespace

TLaurent sin_sq_series(long k, std::int64_t order) {
  return sin_sq_to(k, trunc_after(order));
}

TLaurent sin_half_power(long k, long h, std::int64_t order) {
  if (k < 1) fail(ErrorKind::DomainError, "multiple-cover index k must be >= 1");
  if (h < 0) fail(ErrorKind::DomainError, "genus index h must be >= 0");
  std::int64_t trunc = trunc_after(order);
  if (trunc <= 2 * h - 2)
    fail(ErrorKind::InvalidTruncation,
         "order " + std::to_string(order) + " is below the leading exponent " +
             std::to_string(2 * h - 2));
  if (h == 1) return TLaurent::one_to(trunc);
  if (h == 0) {
    // Inversion of a series with valuation 2 costs four orders of knowledge.
    return sin_sq_to(k, trunc + 4).inverse();
  }
  return sin_sq_to(k, trunc - 2 * h + 4).pow(h - 1);
}

TLaurent unit_sine_series(std::int64_t order) {
  std::int64_t trunc = trunc_after(order);
  if (trunc <= 0) return TLaurent::zero_to(trunc);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(trunc / 2));
  Integer denom = 1;  // 4^m (2m+1)!
  int sign = 1;
  for (std::int64_t m = 0; 2 * m < trunc; ++m) {
    c.emplace_back(Integer(sign), denom);
    denom *= 4;
    denom *= 2 * m + 2;
    denom *= 2 * m + 3;
    sign = -sign;
  }
  return TLaurent::from_coeffs(0, std::move(c));
}

QLaurent q_power_bracket(long k, long h) {
  if (k < 1) fail(ErrorKind::DomainError, "multiple-cover index k must be >= 1");
  if (h < 1)
    fail(ErrorKind::UnsupportedBackend,
         "genus 0 has no Laurent-polynomial form in Q");
  QLaurent base;
  base.set_coeff(k, Rational(1));
  base.set_coeff(-k, Rational(1));
  base.set_coeff(0, Rational(-2));
  QLaurent p = base.pow(static_cast<std::uint64_t>(h - 1));
  return (h % 2 == 0) ? -p : p;
}

TLaurent q_to_t(const QLaurent& p, std::int64_t order) {
  if (!p.is_symmetric())
    fail(ErrorKind::SymmetryViolation,
         "Q-Laurent polynomial is not symmetric under Q -> 1/Q");
  std::int64_t trunc = trunc_after(order);
  if (trunc <= 0) return TLaurent::zero_to(trunc);
  std::vector<Rational> c(static_cast<std::size_t>(trunc / 2), Rational(0));
  c[0] = p.coeff(0);
  for (const auto& [n, cn] : p.terms()) {
    if (n <= 0) continue;
    // cn (Q^n + Q^{-n}) = 2 cn cos(nt)
    Integer nsq = Integer(n) * n;
    Integer npow = 1;  // n^{2m}
    Integer fact = 1;  // (2m)!
    int sign = 1;
    for (std::int64_t m = 0; 2 * m < trunc; ++m) {
      c[static_cast<std::size_t>(m)] +=
          cn * Rational(Integer(2 * sign) * npow, fact);
      npow *= nsq;
      fact *= 2 * m + 1;
      fact *= 2 * m + 2;
      sign = -sign;
    }
  }
  return TLaurent::from_coeffs(0, std::move(c));
}

}  // namespace gvkit
