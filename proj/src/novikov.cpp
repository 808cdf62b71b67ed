#include "gvkit/novikov.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gvkit {

std::shared_ptr<const LatticeContext> LatticeContext::make(
    int rank, std::vector<Rational> weights) {
  if (rank < 1) fail(ErrorKind::DomainError, "lattice rank must be >= 1");
  if (static_cast<int>(weights.size()) != rank)
    fail(ErrorKind::DomainError, "expected one area weight per coordinate");
  for (const auto& w : weights)
    if (w.sign() <= 0)
      fail(ErrorKind::DomainError, "area weights must be positive");
  auto ctx = std::make_shared<LatticeContext>();
  ctx->rank = rank;
  ctx->weights = std::move(weights);
  return ctx;
}

std::shared_ptr<const LatticeContext> LatticeContext::line() {
  return make(1, {Rational(1)});
}

Rational LatticeContext::area(const Coords& a) const {
  if (static_cast<int>(a.size()) != rank)
    fail(ErrorKind::DomainError, "class has wrong number of coordinates");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    s += weights[i] * Rational(static_cast<long>(a[i]));
  return s;
}

std::int64_t degree(const Coords& a) {
  std::int64_t g = 0;
  for (std::int64_t x : a) g = std::gcd(g, x);
  if (g == 0) fail(ErrorKind::DomainError, "degree of the zero class");
  return g;
}

int big_omega(std::int64_t d) {
  if (d < 1) fail(ErrorKind::DomainError, "big_omega needs a positive integer");
  int n = 0;
  for (std::int64_t p = 2; p * p <= d; ++p)
    while (d % p == 0) {
      d /= p;
      ++n;
    }
  if (d > 1) ++n;
  return n;
}

int level(const Coords& a, int g) { return big_omega(degree(a)) + g; }

std::vector<std::pair<std::int64_t, Coords>> divisor_pairs(const Coords& a) {
  std::int64_t d = degree(a);
  std::vector<std::int64_t> divs;
  for (std::int64_t k = 1; k * k <= d; ++k)
    if (d % k == 0) {
      divs.push_back(k);
      if (k != d / k) divs.push_back(d / k);
    }
  std::sort(divs.begin(), divs.end());
  std::vector<std::pair<std::int64_t, Coords>> out;
  out.reserve(divs.size());
  for (std::int64_t k : divs) {
    Coords b = a;
    for (auto& x : b) x /= k;
    out.emplace_back(k, std::move(b));
  }
  return out;
}

TermTable::TermTable(std::shared_ptr<const LatticeContext> ctx,
                     Rational energy, int index_max)
    : ctx_(std::move(ctx)), energy_(std::move(energy)), index_max_(index_max) {
  if (!ctx_) fail(ErrorKind::DomainError, "table needs a lattice context");
  if (energy_.sign() <= 0)
    fail(ErrorKind::DomainError, "energy bound must be positive");
  if (index_max_ < 0)
    fail(ErrorKind::DomainError, "genus bound must be >= 0");
}

void TermTable::check_class(const Coords& a, int index,
                            Rational* area_out) const {
  Rational w = ctx_->area(a);
  if (w.sign() <= 0)
    fail(ErrorKind::DomainError, "curve class must have positive area");
  if (index < 0) fail(ErrorKind::DomainError, "genus index must be >= 0");
  if (area_out) *area_out = std::move(w);
}

bool TermTable::in_window(const Coords& a, int index) const {
  Rational w;
  check_class(a, index, &w);
  return w <= energy_ && index <= index_max_;
}

void TermTable::set(const Coords& a, int index, const Rational& c) {
  Rational w;
  check_class(a, index, &w);
  if (w > energy_ || index > index_max_)
    fail(ErrorKind::TruncationUnsound,
         "term lies outside the declared truncation window");
  Key key{std::move(w), a, index};
  if (c.is_zero())
    terms_.erase(key);
  else
    terms_[std::move(key)] = c;
}

void TermTable::add(const Coords& a, int index, const Rational& c) {
  if (c.is_zero()) return;
  Rational w;
  check_class(a, index, &w);
  if (w > energy_ || index > index_max_)
    fail(ErrorKind::TruncationUnsound,
         "term lies outside the declared truncation window");
  Key key{std::move(w), a, index};
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational TermTable::coeff(const Coords& a, int index) const {
  Rational w;
  check_class(a, index, &w);
  if (w > energy_ || index > index_max_)
    fail(ErrorKind::InvalidTruncation,
         "coefficient outside the truncation window is unknown");
  auto it = terms_.find(Key{std::move(w), a, index});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Coords> TermTable::support_classes() const {
  std::vector<Coords> out;
  for (const auto& [key, c] : terms_)
    if (out.empty() || out.back() != key.coords) out.push_back(key.coords);
  return out;
}

TermTable& TermTable::operator+=(const TermTable& o) {
  if (!ctx_->same_as(*o.ctx_))
    fail(ErrorKind::IncompatibleContext,
         "cannot combine tables over different lattice contexts");
  Rational e = std::min(energy_, o.energy_);
  int gmax = std::min(index_max_, o.index_max_);
  TermTable r(ctx_, e, gmax);
  for (const auto& [key, c] : terms_)
    if (key.area <= e && key.index <= gmax) r.add(key.coords, key.index, c);
  for (const auto& [key, c] : o.terms_)
    if (key.area <= e && key.index <= gmax) r.add(key.coords, key.index, c);
  return *this = std::move(r);
}

TermTable TermTable::scaled(const Rational& c) const {
  TermTable r(ctx_, energy_, index_max_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
  return r;
}

TermTable TermTable::truncated(const Rational& energy, int index_max) const {
  if (energy > energy_ || index_max > index_max_)
    fail(ErrorKind::TruncationUnsound,
         "cannot widen a truncation window: coefficients beyond it are unknown");
  TermTable r(ctx_, energy, index_max);
  for (const auto& [key, c] : terms_)
    if (key.area <= energy && key.index <= index_max)
      r.terms_.emplace(key, c);
  return r;
}

bool operator==(const TermTable& a, const TermTable& b) {
  if (!a.ctx_->same_as(*b.ctx_)) return false;
  if (a.energy_ != b.energy_ || a.index_max_ != b.index_max_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [key, c] : a.terms_) {
    if (key.coords != it->first.coords || key.index != it->first.index ||
        c != it->second)
      return false;
    ++it;
  }
  return true;
}

}  // namespace gvkit
