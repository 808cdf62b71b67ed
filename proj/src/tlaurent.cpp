#include "gvkit/tlaurent.hpp"

#include <algorithm>
#include <string>

namespace gvkit {

void TLaurent::check_even(std::int64_t e, const char* what) {
  if (e % 2 != 0)
    fail(ErrorKind::DomainError,
         std::string(what) + " must be even, got " + std::to_string(e));
}

void TLaurent::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_ += 2 * static_cast<std::int64_t>(lead);
  }
}

TLaurent TLaurent::zero_to(std::int64_t trunc) {
  check_even(trunc, "truncation order");
  TLaurent r;
  r.min_ = r.trunc_ = trunc;
  return r;
}

TLaurent TLaurent::one_to(std::int64_t trunc) {
  return monomial(0, Rational(1), trunc);
}

TLaurent TLaurent::monomial(std::int64_t exp, const Rational& c,
                            std::int64_t trunc) {
  check_even(exp, "exponent");
  check_even(trunc, "truncation order");
  if (exp >= trunc)
    fail(ErrorKind::InvalidTruncation,
         "monomial exponent " + std::to_string(exp) +
             " not below truncation " + std::to_string(trunc));
  TLaurent r;
  r.min_ = exp;
  r.trunc_ = trunc;
  r.c_.assign(static_cast<std::size_t>((trunc - exp) / 2), Rational(0));
  r.c_[0] = c;
  r.normalize();
  return r;
}

TLaurent TLaurent::from_coeffs(std::int64_t min_exp,
                               std::vector<Rational> coeffs) {
  check_even(min_exp, "min exponent");
  TLaurent r;
  r.min_ = min_exp;
  r.trunc_ = min_exp + 2 * static_cast<std::int64_t>(coeffs.size());
  r.c_ = std::move(coeffs);
  r.normalize();
  return r;
}

std::optional<std::int64_t> TLaurent::valuation() const {
  if (c_.empty()) return std::nullopt;
  return min_;  // normalized: the first stored coefficient is nonzero
}

Rational TLaurent::coeff(std::int64_t e) const {
  if (e >= trunc_)
    fail(ErrorKind::InvalidTruncation,
         "coefficient of t^" + std::to_string(e) +
             " is beyond the known order " + std::to_string(trunc_));
  if (e < min_ || e % 2 != 0) return Rational(0);
  return c_[static_cast<std::size_t>((e - min_) / 2)];
}

TLaurent TLaurent::operator-() const {
  TLaurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TLaurent operator+(const TLaurent& a, const TLaurent& b) {
  std::int64_t trunc = std::min(a.trunc_, b.trunc_);
  std::int64_t min = std::min({a.min_, b.min_, trunc});
  TLaurent r;
  r.min_ = min;
  r.trunc_ = trunc;
  r.c_.assign(static_cast<std::size_t>((trunc - min) / 2), Rational(0));
  for (std::int64_t e = min; e < trunc; e += 2) {
    auto i = static_cast<std::size_t>((e - min) / 2);
    if (e >= a.min_ && e < a.trunc_)
      r.c_[i] += a.c_[static_cast<std::size_t>((e - a.min_) / 2)];
    if (e >= b.min_ && e < b.trunc_)
      r.c_[i] += b.c_[static_cast<std::size_t>((e - b.min_) / 2)];
  }
  r.normalize();
  return r;
}

TLaurent operator-(const TLaurent& a, const TLaurent& b) { return a + (-b); }

TLaurent operator*(const TLaurent& a, const TLaurent& b) {
  // p = P + O(t^{pT}) gives a*b = A*B + O(t^{a.min + bT}) + O(t^{b.min + aT}).
  std::int64_t trunc = std::min(a.min_ + b.trunc_, b.min_ + a.trunc_);
  std::int64_t min = std::min(a.min_ + b.min_, trunc);
  TLaurent r;
  r.min_ = min;
  r.trunc_ = trunc;
  r.c_.assign(static_cast<std::size_t>((trunc - min) / 2), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    std::int64_t ea = a.min_ + 2 * static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::int64_t e = ea + b.min_ + 2 * static_cast<std::int64_t>(j);
      if (e >= trunc) break;
      if (b.c_[j].is_zero()) continue;
      r.c_[static_cast<std::size_t>((e - min) / 2)] += a.c_[i] * b.c_[j];
    }
  }
  r.normalize();
  return r;
}

TLaurent TLaurent::scaled(const Rational& c) const {
  if (c.is_zero()) return zero_to(trunc_);
  TLaurent r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

TLaurent TLaurent::shifted(std::int64_t k) const {
  check_even(k, "shift");
  TLaurent r = *this;
  r.min_ += k;
  r.trunc_ += k;
  return r;
}

TLaurent TLaurent::inverse() const {
  if (c_.empty())
    fail(ErrorKind::DomainError,
         "cannot invert: no nonzero coefficient in the known range");
  std::int64_t v = min_;
  std::int64_t rel = trunc_ - min_;  // relative precision, preserved below
  const Rational& lead = c_[0];
  // *this = lead * t^v * (1 + w); invert (1 + w) by the division recurrence.
  std::size_t n = static_cast<std::size_t>(rel / 2);
  std::vector<Rational> b(n, Rational(0));
  b[0] = Rational(1);
  for (std::size_t m = 1; m < n; ++m) {
    Rational s(0);
    for (std::size_t k = 1; k <= m; ++k) {
      const Rational wk = c_[k] / lead;  // coefficient of t^{2k} in w
      if (!wk.is_zero()) s += wk * b[m - k];
    }
    b[m] = -s;
  }
  Rational inv_lead = Rational(1) / lead;
  for (auto& x : b) x *= inv_lead;
  return from_coeffs(-v, std::move(b));
}

TLaurent TLaurent::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  std::int64_t rel = std::max<std::int64_t>(trunc_ - min_, 2);
  TLaurent acc = one_to(rel);
  TLaurent base = *this;
  auto u = static_cast<std::uint64_t>(e);
  while (u > 0) {
    if (u & 1) acc *= base;
    u >>= 1;
    if (u) base *= base;
  }
  return acc;
}

TLaurent TLaurent::truncated(std::int64_t new_trunc) const {
  check_even(new_trunc, "truncation order");
  if (new_trunc >= trunc_) return *this;
  TLaurent r;
  r.trunc_ = new_trunc;
  r.min_ = std::min(min_, new_trunc);
  if (new_trunc > min_)
    r.c_.assign(c_.begin(),
                c_.begin() + static_cast<std::ptrdiff_t>((new_trunc - min_) / 2));
  r.normalize();
  return r;
}

}  // namespace gvkit
