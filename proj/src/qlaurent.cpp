#include "gvkit/qlaurent.hpp"

namespace gvkit {

QLaurent QLaurent::monomial(std::int64_t exp, const Rational& c) {
  QLaurent p;
  if (!c.is_zero()) p.c_.emplace(exp, c);
  return p;
}

std::int64_t QLaurent::min_exp() const {
  if (c_.empty()) fail(ErrorKind::DomainError, "min_exp of zero polynomial");
  return c_.begin()->first;
}

std::int64_t QLaurent::max_exp() const {
  if (c_.empty()) fail(ErrorKind::DomainError, "max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Rational QLaurent::coeff(std::int64_t n) const {
  auto it = c_.find(n);
  return it == c_.end() ? Rational(0) : it->second;
}

void QLaurent::set_coeff(std::int64_t n, const Rational& c) {
  if (c.is_zero())
    c_.erase(n);
  else
    c_[n] = c;
}

void QLaurent::add_coeff(std::int64_t n, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.emplace(n, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

bool QLaurent::is_symmetric() const {
  for (const auto& [n, c] : c_)
    if (coeff(-n) != c) return false;
  return true;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [n, c] : c_) r.c_.emplace(n, -c);
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [n, c] : o.c_) add_coeff(n, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [n, c] : o.c_) add_coeff(n, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [n, cn] : a.c_)
    for (const auto& [m, cm] : b.c_) r.add_coeff(n + m, cn * cm);
  return r;
}

QLaurent QLaurent::scaled(const Rational& c) const {
  QLaurent r;
  if (c.is_zero()) return r;
  for (const auto& [n, cn] : c_) r.c_.emplace(n, cn * c);
  return r;
}

QLaurent QLaurent::stretched(std::int64_t k) const {
  if (k == 0) fail(ErrorKind::DomainError, "Q -> Q^0 is not a substitution");
  QLaurent r;
  for (const auto& [n, cn] : c_) r.c_.emplace(n * k, cn);
  return r;
}

QLaurent QLaurent::pow(std::uint64_t e) const {
  QLaurent acc = QLaurent::one();
  QLaurent base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

}  // namespace gvkit
