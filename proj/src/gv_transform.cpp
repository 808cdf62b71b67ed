#include "gvkit/gv_transform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "gvkit/expansions.hpp"

namespace gvkit {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

void check_t_order(int gmax, std::int64_t t_order) {
  if (t_order < 2 * static_cast<std::int64_t>(gmax) + 2)
    fail(ErrorKind::InvalidTruncation,
         "t-order " + std::to_string(t_order) +
             " is too small for genus bound " + std::to_string(gmax) +
             " (need at least " + std::to_string(2 * gmax + 2) + ")");
}

// Lazily built family of cover matrices, keyed by the cover degree k.
class MatrixCache {
 public:
  MatrixCache(int gmax, std::int64_t t_order)
      : gmax_(gmax), t_order_(t_order) {}

  const Matrix& at(long k) {
    auto it = cache_.find(k);
    if (it == cache_.end())
      it = cache_.emplace(k, bps_kernel_matrix(k, gmax_, t_order_)).first;
    return it->second;
  }

 private:
  int gmax_;
  std::int64_t t_order_;
  std::map<long, Matrix> cache_;
};

}  // namespace

// The sweep set of an inversion: all divisor classes of the support,
// together with their multiples inside the energy window, in ascending
// (area, lex) order.  This set is closed under taking divisor classes.
std::vector<Coords> inversion_sweep(const TermTable& t) {
  std::set<Coords> base;
  for (const Coords& a : t.support_classes())
    for (const auto& [k, b] : divisor_pairs(a)) {
      (void)k;
      base.insert(b);
    }
  std::set<Coords> all;
  for (const Coords& b : base)
    for (std::int64_t k = 1;; ++k) {
      Coords kb = b;
      for (auto& x : kb) x *= k;
      if (t.context().area(kb) > t.energy()) break;
      all.insert(kb);
    }
  std::vector<Coords> sweep(all.begin(), all.end());
  std::sort(sweep.begin(), sweep.end(), [&](const Coords& x, const Coords& y) {
    Rational ax = t.context().area(x), ay = t.context().area(y);
    if (ax != ay) return ax < ay;
    return x < y;
  });
  return sweep;
}

// Defensive witness of the divisor-closure precondition.  With positive
// area weights a divisor class always has smaller area, so an energy window
// is divisor-closed by construction; a violation would mean the window is
// not a sound truncation.
void check_divisor_closed(const TermTable& t) {
  for (const Coords& a : t.support_classes())
    for (const auto& [k, b] : divisor_pairs(a)) {
      (void)k;
      if (t.context().area(b) > t.energy())
        fail(ErrorKind::TruncationUnsound,
             "truncation window is not closed under divisor classes");
    }
}

std::vector<std::vector<Rational>> bps_kernel_matrix(long k, int gmax,
                                                     std::int64_t t_order) {
  if (gmax < 0) fail(ErrorKind::DomainError, "genus bound must be >= 0");
  std::int64_t order = std::max<std::int64_t>(t_order, 2 * gmax);
  Matrix m(static_cast<std::size_t>(gmax) + 1,
           std::vector<Rational>(static_cast<std::size_t>(gmax) + 1,
                                 Rational(0)));
  TLaurent inv = sin_half_power(k, 0, order);
  for (int g = 0; g <= gmax; ++g) m[static_cast<std::size_t>(g)][0] = inv.coeff(2 * g - 2);
  TLaurent base = sin_sq_series(k, order);
  TLaurent pow = TLaurent::one_to(trunc_after(order));
  for (int h = 1; h <= gmax; ++h) {
    for (int g = 0; g <= gmax; ++g)
      m[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          (2 * g - 2 < pow.known_to()) ? pow.coeff(2 * g - 2) : Rational(0);
    if (h < gmax) pow *= base;
  }
  return m;
}

std::vector<std::vector<Rational>> fano_kernel_matrix(long c1, int gmax,
                                                      std::int64_t t_order) {
  if (gmax < 0) fail(ErrorKind::DomainError, "genus bound must be >= 0");
  if (c1 <= 0) fail(ErrorKind::DomainError, "Fano basis needs c1 > 0");
  std::int64_t order = std::max<std::int64_t>(t_order, 2 * gmax);
  Matrix m(static_cast<std::size_t>(gmax) + 1,
           std::vector<Rational>(static_cast<std::size_t>(gmax) + 1,
                                 Rational(0)));
  TLaurent e = unit_sine_series(order);
  // (2 sin(t/2))^{c1+2h-2} t^{-c1} = t^{2h-2} E(t)^{c1+2h-2}
  TLaurent epow = e.pow(c1 - 2);
  TLaurent esq = e * e;
  for (int h = 0; h <= gmax; ++h) {
    for (int g = h; g <= gmax; ++g)
      m[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          (2 * (g - h) < epow.known_to()) ? epow.coeff(2 * (g - h))
                                          : Rational(0);
    if (h < gmax) epow *= esq;
  }
  return m;
}

NovikovSeries bps_forward(const BpsTable& n, const Rational& energy, int gmax,
                          std::int64_t t_order) {
  check_t_order(gmax, t_order);
  if (energy > n.energy() || gmax > n.index_max())
    fail(ErrorKind::TruncationUnsound,
         "requested output window exceeds what the BPS table determines");
  MatrixCache mats(gmax, t_order);
  NovikovSeries out(n.context_ptr(), energy, gmax);
  for (const auto& [key, val] : n.terms()) {
    const int h = key.index;
    if (h > gmax) continue;  // contributes to g >= h only
    for (std::int64_t k = 1;; ++k) {
      Coords ka = key.coords;
      for (auto& x : ka) x *= k;
      if (n.context().area(ka) > energy) break;
      const Matrix& m = mats.at(k);
      for (int g = h; g <= gmax; ++g) {
        const Rational& c = m[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
        if (!c.is_zero()) out.add(ka, g, val * c / Rational(k));
      }
    }
  }
  return out;
}

BpsTable bps_invert(const NovikovSeries& gw, std::int64_t t_order) {
  const int gmax = gw.index_max();
  check_t_order(gmax, t_order);
  check_divisor_closed(gw);
  MatrixCache mats(gmax, t_order);
  const Matrix& unit = mats.at(1);
  BpsTable out(gw.context_ptr(), gw.energy(), gmax);
  for (const Coords& a : inversion_sweep(gw)) {
    std::vector<Rational> r(static_cast<std::size_t>(gmax) + 1);
    for (int g = 0; g <= gmax; ++g)
      r[static_cast<std::size_t>(g)] = gw.coeff(a, g);
    for (const auto& [k, b] : divisor_pairs(a)) {
      if (k < 2) continue;
      const Matrix& m = mats.at(k);
      for (int h = 0; h <= gmax; ++h) {
        Rational nb = out.coeff(b, h);
        if (nb.is_zero()) continue;
        nb /= Rational(static_cast<long>(k));
        for (int g = h; g <= gmax; ++g)
          r[static_cast<std::size_t>(g)] -=
              nb * m[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      }
    }
    // Unit lower-triangular solve in h, ascending.
    std::vector<Rational> na(static_cast<std::size_t>(gmax) + 1);
    for (int g = 0; g <= gmax; ++g) {
      Rational v = r[static_cast<std::size_t>(g)];
      for (int h = 0; h < g; ++h)
        v -= na[static_cast<std::size_t>(h)] *
             unit[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      na[static_cast<std::size_t>(g)] = v;
      out.add(a, g, v);
    }
  }
  return out;
}

std::int64_t chern_of(const Coords& chern, const Coords& a) {
  if (chern.size() != a.size())
    fail(ErrorKind::IncompatibleContext,
         "Chern form and class have different ranks");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += chern[i] * a[i];
  return s;
}

BpsTable fano_invert(const FanoSeries& f, std::int64_t t_order) {
  const NovikovSeries& gw = f.series;
  const int gmax = gw.index_max();
  check_t_order(gmax, t_order);
  if (static_cast<int>(f.chern.size()) != gw.context().rank)
    fail(ErrorKind::IncompatibleContext,
         "Chern form rank does not match the lattice");
  std::map<long, Matrix> mats;
  BpsTable out(gw.context_ptr(), gw.energy(), gmax);
  // Classes decouple; terms of one class are consecutive in canonical order.
  auto it = gw.terms().begin();
  while (it != gw.terms().end()) {
    const Coords a = it->first.coords;
    std::vector<Rational> r(static_cast<std::size_t>(gmax) + 1);
    for (; it != gw.terms().end() && it->first.coords == a; ++it)
      r[static_cast<std::size_t>(it->first.index)] = it->second;
    long c1 = static_cast<long>(chern_of(f.chern, a));
    if (c1 <= 0)
      fail(ErrorKind::DomainError,
           "Fano transform needs c1(A) > 0 for every class");
    auto mit = mats.find(c1);
    if (mit == mats.end())
      mit = mats.emplace(c1, fano_kernel_matrix(c1, gmax, t_order)).first;
    const Matrix& m = mit->second;
    std::vector<Rational> na(static_cast<std::size_t>(gmax) + 1);
    for (int g = 0; g <= gmax; ++g) {
      Rational v = r[static_cast<std::size_t>(g)];
      for (int h = 0; h < g; ++h)
        v -= na[static_cast<std::size_t>(h)] *
             m[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      na[static_cast<std::size_t>(g)] = v;
      out.add(a, g, v);
    }
  }
  return out;
}

NovikovSeries fano_forward(const BpsTable& n, const Coords& chern,
                           std::int64_t t_order) {
  const int gmax = n.index_max();
  check_t_order(gmax, t_order);
  if (static_cast<int>(chern.size()) != n.context().rank)
    fail(ErrorKind::IncompatibleContext,
         "Chern form rank does not match the lattice");
  std::map<long, Matrix> mats;
  NovikovSeries out(n.context_ptr(), n.energy(), gmax);
  for (const auto& [key, val] : n.terms()) {
    long c1 = static_cast<long>(chern_of(chern, key.coords));
    if (c1 <= 0)
      fail(ErrorKind::DomainError,
           "Fano transform needs c1(A) > 0 for every class");
    auto mit = mats.find(c1);
    if (mit == mats.end())
      mit = mats.emplace(c1, fano_kernel_matrix(c1, gmax, t_order)).first;
    const Matrix& m = mit->second;
    for (int g = key.index; g <= gmax; ++g) {
      const Rational& c =
          m[static_cast<std::size_t>(g)][static_cast<std::size_t>(key.index)];
      if (!c.is_zero()) out.add(key.coords, g, val * c);
    }
  }
  return out;
}

TermTable am_invert(const TermTable& gw0, int insertions) {
  if (insertions < 0)
    fail(ErrorKind::DomainError, "insertion count must be >= 0");
  for (const auto& [key, val] : gw0.terms()) {
    (void)val;
    if (key.index != 0)
      fail(ErrorKind::DomainError,
           "Aspinwall-Morrison transform takes genus-0 data only");
  }
  check_divisor_closed(gw0);
  TermTable out(gw0.context_ptr(), gw0.energy(), 0);
  for (const Coords& a : inversion_sweep(gw0)) {
    Rational v = gw0.coeff(a, 0);
    for (const auto& [d, b] : divisor_pairs(a)) {
      if (d < 2) continue;
      Rational nb = out.coeff(b, 0);
      if (!nb.is_zero())
        v -= nb * Rational(static_cast<long>(d)).pow_int(insertions - 3);
    }
    out.add(a, 0, v);
  }
  return out;
}

TermTable am_forward(const TermTable& n0, int insertions) {
  if (insertions < 0)
    fail(ErrorKind::DomainError, "insertion count must be >= 0");
  TermTable out(n0.context_ptr(), n0.energy(), 0);
  for (const auto& [key, val] : n0.terms()) {
    if (key.index != 0)
      fail(ErrorKind::DomainError,
           "Aspinwall-Morrison transform takes genus-0 data only");
    for (std::int64_t d = 1;; ++d) {
      Coords da = key.coords;
      for (auto& x : da) x *= d;
      if (n0.context().area(da) > n0.energy()) break;
      out.add(da, 0,
              val * Rational(static_cast<long>(d)).pow_int(insertions - 3));
    }
  }
  return out;
}

std::int64_t expected_dimension(std::int64_t c1A, int dimX, int g,
                                const std::vector<int>& insertion_dims) {
  if (dimX < 6 || dimX % 2 != 0)
    fail(ErrorKind::DomainError, "dim X must be an even integer >= 6");
  if (g < 0) fail(ErrorKind::DomainError, "genus must be >= 0");
  std::int64_t s = 0;
  for (int d : insertion_dims) {
    if (d < 2)
      fail(ErrorKind::DomainError, "insertion dimensions must be >= 2");
    s += d;
  }
  return 2 * c1A + static_cast<std::int64_t>(dimX - 6) * (1 - g) +
         2 * static_cast<std::int64_t>(insertion_dims.size()) - s;
}

std::pair<NovikovSeries, NovikovSeries> split_by_chern(
    const NovikovSeries& gw, const Coords& chern) {
  NovikovSeries cy(gw.context_ptr(), gw.energy(), gw.index_max());
  NovikovSeries fano(gw.context_ptr(), gw.energy(), gw.index_max());
  for (const auto& [key, val] : gw.terms()) {
    std::int64_t c1 = chern_of(chern, key.coords);
    if (c1 < 0)
      fail(ErrorKind::DomainError,
           "class with negative c1 has no transform (its GW invariants vanish)");
    (c1 == 0 ? cy : fano).add(key.coords, key.index, val);
  }
  return {std::move(cy), std::move(fano)};
}

}  // namespace gvkit
