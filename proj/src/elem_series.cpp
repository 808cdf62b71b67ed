#include "gvkit/elem_series.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <tuple>

#include "gvkit/expansions.hpp"
#include "gvkit/gv_transform.hpp"
#include "gvkit/novikov.hpp"

namespace gvkit {

namespace {

void check_sizes(int g, int D) {
  if (g < 0) fail(ErrorKind::DomainError, "genus must be >= 0");
  if (D < 0) fail(ErrorKind::DomainError, "q-degree must be >= 0");
}

const QLaurent& q_at(const std::vector<QLaurent>& v, int d) {
  return v[static_cast<std::size_t>(d)];
}
const TLaurent& t_at(const std::vector<TLaurent>& v, int d) {
  return v[static_cast<std::size_t>(d)];
}

}  // namespace

const QLaurent& ElemSeries::qc(int d) const {
  if (backend != Backend::Q)
    fail(ErrorKind::UnsupportedBackend, "series has no Q coefficients");
  if (d < 0 || d > q_degree)
    fail(ErrorKind::DomainError, "q-degree out of range");
  return q_at(q_coeffs, d);
}

const TLaurent& ElemSeries::tc(int d) const {
  if (backend != Backend::T)
    fail(ErrorKind::UnsupportedBackend, "series has no t coefficients");
  if (d < 0 || d > q_degree)
    fail(ErrorKind::DomainError, "q-degree out of range");
  return t_at(t_coeffs, d);
}

std::int64_t default_t_order(int g, int D) {
  std::int64_t h_max = (g >= 2)
                           ? static_cast<std::int64_t>(D) * D * (g - 1) + 1
                           : 8;
  return 2 * h_max + 2;
}

ElemSeries z_elem(int g, int D, Backend backend, std::int64_t t_order,
                  const ThreadPolicy& policy) {
  check_sizes(g, D);
  ElemSeries s;
  s.genus = g;
  s.q_degree = D;
  s.backend = backend;
  if (backend == Backend::Q) {
    s.q_coeffs = kernels::z_coeffs_q(D, g, policy);
  } else {
    s.t_order = (t_order < 0) ? default_t_order(g, D) : t_order;
    s.t_coeffs = kernels::z_coeffs_t(D, g, s.t_order, policy);
  }
  return s;
}

std::vector<QLaurent> series_log_q(const std::vector<QLaurent>& z) {
  if (z.empty() || z[0] != QLaurent::one())
    fail(ErrorKind::DomainError, "series log needs constant term 1");
  int D = static_cast<int>(z.size()) - 1;
  std::vector<QLaurent> s = z;
  s[0] = QLaurent();
  std::vector<QLaurent> out = s;  // k = 1 term
  std::vector<QLaurent> cur = s;
  for (int k = 2; k <= D; ++k) {
    std::vector<QLaurent> next(z.size());
    for (int n = k; n <= D; ++n)
      for (int i = k - 1; i < n; ++i)
        next[static_cast<std::size_t>(n)] +=
            q_at(cur, i) * q_at(s, n - i);
    cur = std::move(next);
    Rational c(k % 2 == 0 ? -1 : 1, k);
    for (int n = k; n <= D; ++n)
      out[static_cast<std::size_t>(n)] += q_at(cur, n).scaled(c);
  }
  return out;
}

std::vector<QLaurent> series_exp_q(const std::vector<QLaurent>& gw) {
  if (gw.empty() || !gw[0].is_zero())
    fail(ErrorKind::DomainError, "series exp needs constant term 0");
  int D = static_cast<int>(gw.size()) - 1;
  std::vector<QLaurent> out = gw;
  out[0] = QLaurent::one();
  std::vector<QLaurent> cur = gw;
  Rational factorial(1);
  for (int k = 2; k <= D; ++k) {
    std::vector<QLaurent> next(gw.size());
    for (int n = k; n <= D; ++n)
      for (int i = k - 1; i < n; ++i)
        next[static_cast<std::size_t>(n)] +=
            q_at(cur, i) * q_at(gw, n - i);
    cur = std::move(next);
    factorial *= Rational(k);
    Rational c = Rational(1) / factorial;
    for (int n = k; n <= D; ++n)
      out[static_cast<std::size_t>(n)] += q_at(cur, n).scaled(c);
  }
  return out;
}

namespace {

// Shared shape of log/exp on t-coefficient vectors.  terms[k] is the
// rational weight of S^k (1-based); S must have zero constant term.
std::vector<TLaurent> t_power_sum(const std::vector<TLaurent>& s,
                                  const std::vector<Rational>& weight,
                                  const TLaurent& constant) {
  int D = static_cast<int>(s.size()) - 1;
  std::vector<TLaurent> out(s.size());
  out[0] = constant;
  for (int n = 1; n <= D; ++n)
    out[static_cast<std::size_t>(n)] =
        t_at(s, n).scaled(weight[1]);
  std::vector<TLaurent> cur = s;
  for (int k = 2; k <= D; ++k) {
    std::vector<TLaurent> next(s.size());
    for (int n = k; n <= D; ++n) {
      std::optional<TLaurent> acc;
      for (int i = k - 1; i < n; ++i) {
        TLaurent term = t_at(cur, i) * t_at(s, n - i);
        if (acc)
          *acc += term;
        else
          acc = std::move(term);
      }
      next[static_cast<std::size_t>(n)] = std::move(*acc);
    }
    cur = std::move(next);
    for (int n = k; n <= D; ++n)
      out[static_cast<std::size_t>(n)] +=
          t_at(cur, n).scaled(weight[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

std::vector<TLaurent> series_log_t(const std::vector<TLaurent>& z) {
  if (z.empty()) fail(ErrorKind::DomainError, "series log needs constant term 1");
  int D = static_cast<int>(z.size()) - 1;
  std::vector<TLaurent> s = z;
  s[0] = z[0] - TLaurent::one_to(z[0].known_to());
  if (!s[0].known_zero())
    fail(ErrorKind::DomainError, "series log needs constant term 1");
  s[0] = TLaurent::zero_to(z[0].known_to());
  std::vector<Rational> weight(static_cast<std::size_t>(std::max(D, 1)) + 1,
                               Rational(0));
  for (int k = 1; k <= D; ++k)
    weight[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? -1 : 1, k);
  return t_power_sum(s, weight, TLaurent::zero_to(z[0].known_to()));
}

std::vector<TLaurent> series_exp_t(const std::vector<TLaurent>& gw) {
  if (gw.empty() || !gw[0].known_zero())
    fail(ErrorKind::DomainError, "series exp needs constant term 0");
  int D = static_cast<int>(gw.size()) - 1;
  std::vector<Rational> weight(static_cast<std::size_t>(std::max(D, 1)) + 1,
                               Rational(0));
  Rational factorial(1);
  for (int k = 1; k <= D; ++k) {
    factorial *= Rational(k);
    weight[static_cast<std::size_t>(k)] = Rational(1) / factorial;
  }
  return t_power_sum(gw, weight, TLaurent::one_to(gw[0].known_to()));
}

ElemSeries gw_elem(int g, int D, Backend backend, std::int64_t t_order,
                   const ThreadPolicy& policy) {
  check_sizes(g, D);
  ElemSeries s;
  s.genus = g;
  s.q_degree = D;
  s.backend = backend;
  s.is_log = true;
  if (backend == Backend::Q) {
    s.q_coeffs = series_log_q(kernels::z_coeffs_q(D, g, policy));
  } else {
    s.t_order = (t_order < 0) ? default_t_order(g, D) : t_order;
    s.t_coeffs = gw_elem_t(g, D, s.t_order, policy);
  }
  return s;
}

std::vector<TLaurent> gw_elem_t(int g, int D, std::int64_t order,
                                const ThreadPolicy& policy) {
  check_sizes(g, D);
  using MemoKey = std::tuple<int, int, std::int64_t>;
  static std::mutex mu;
  static std::map<MemoKey, std::vector<TLaurent>> memo;
  MemoKey key{g, D, order};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::int64_t trunc = trunc_after(order);
  std::vector<TLaurent> zt;
  if (g >= 1) {
    // Exact on the Q backend, then converted; the log costs no knowledge
    // because every coefficient is pole-free.
    std::vector<QLaurent> zq = kernels::z_coeffs_q(D, g, policy);
    zt.reserve(zq.size());
    for (const QLaurent& c : zq) zt.push_back(q_to_t(c, order));
  } else {
    // Pole at t^-2 per q-degree: pad so the log still reaches `order`.
    zt = kernels::z_coeffs_t(D, 0, order + 2 * std::max(0, D - 1), policy);
  }
  std::vector<TLaurent> gw = series_log_t(zt);
  for (TLaurent& c : gw) c = c.truncated(trunc);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(gw)).first->second;
}

std::map<std::pair<std::int64_t, int>, Integer> q_coefficients(
    int g, int D, const ThreadPolicy& policy) {
  std::vector<QLaurent> z = kernels::z_coeffs_q(D, g, policy);
  std::map<std::pair<std::int64_t, int>, Integer> out;
  for (int d = 0; d <= D; ++d)
    for (const auto& [n, c] : q_at(z, d).terms()) {
      if (!c.is_integer())
        fail(ErrorKind::InternalConsistency,
             "non-integer Q-coefficient A_{" + std::to_string(n) + "," +
                 std::to_string(d) + "} = " + c.to_string());
      out.emplace(std::make_pair(n, d), c.numerator());
    }
  return out;
}

Rational LocalBps::at(int d, int h) const {
  auto it = table.find({d, h});
  return it == table.end() ? Rational(0) : it->second;
}

LocalBps local_bps(int g, int D, std::int64_t t_order,
                   const ThreadPolicy& policy) {
  check_sizes(g, D);
  if (D < 1) fail(ErrorKind::DomainError, "local BPS needs q-degree >= 1");
  if (t_order < 0) t_order = default_t_order(g, D);
  // Largest h-window the inversion accepts at this order: 2 h_max + 2 <= T.
  int h_max = static_cast<int>((t_order - 2) / 2);
  if (h_max < 0)
    fail(ErrorKind::InvalidTruncation,
         "t-order " + std::to_string(t_order) +
             " determines no BPS row (need at least 2)");
  std::vector<TLaurent> gw = gw_elem_t(g, D, t_order, policy);
  NovikovSeries series(LatticeContext::line(), Rational(D), h_max);
  for (int d = 1; d <= D; ++d)
    for (int gg = 0; gg <= h_max; ++gg)
      series.add({d}, gg, t_at(gw, d).coeff(2 * gg - 2));
  BpsTable n = bps_invert(series, t_order);
  LocalBps out;
  out.genus = g;
  out.q_degree = D;
  out.h_max = h_max;
  for (const auto& [key, c] : n.terms())
    out.table.emplace(std::make_pair(static_cast<int>(key.coords[0]),
                                     key.index),
                      c);
  return out;
}

LocalReport check_local_bps(int g, int D, std::int64_t t_order,
                            const ThreadPolicy& policy) {
  LocalReport rep;
  rep.genus = g;
  rep.q_degree = D;
  rep.bps = local_bps(g, D, t_order, policy);
  rep.h_max = rep.bps.h_max;
  auto flag = [&](int d, int h, const Rational& v, const char* rule) {
    rep.violations.push_back(LocalViolation{d, h, v, rule});
  };
  if (g == 0) {
    for (const auto& [dh, v] : rep.bps.table)
      if (dh != std::make_pair(1, 0)) flag(dh.first, dh.second, v, "genus0_support");
    if (rep.bps.at(1, 0) != Rational(1))
      flag(1, 0, rep.bps.at(1, 0), "genus0_support");
  } else if (g == 1) {
    for (const auto& [dh, v] : rep.bps.table)
      if (dh.second != 1) flag(dh.first, dh.second, v, "genus1_support");
    for (int d = 1; d <= D; ++d)
      if (rep.bps.at(d, 1) != Rational(1))
        flag(d, 1, rep.bps.at(d, 1), "genus1_support");
  } else {
    for (const auto& [dh, v] : rep.bps.table) {
      auto [d, h] = dh;
      if (!v.is_integer()) flag(d, h, v, "integrality");
      if (h < g) flag(d, h, v, "vanishing_below_genus");
      if (static_cast<std::int64_t>(h) - 1 >
          static_cast<std::int64_t>(d) * d * (g - 1))
        flag(d, h, v, "vanishing_above_bound");
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace gvkit
