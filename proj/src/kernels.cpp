#include "gvkit/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "gvkit/expansions.hpp"

namespace gvkit {

ThreadPolicy ThreadPolicy::from_env() {
  const char* v = std::getenv("GVKIT_THREADS");
  if (v == nullptr || *v == '\0') return ThreadPolicy{0};
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == nullptr || *end != '\0' || n < 0)
    fail(ErrorKind::DomainError,
         "GVKIT_THREADS must be a nonnegative integer, got \"" +
             std::string(v) + "\"");
  return ThreadPolicy{static_cast<int>(n)};
}

namespace reference {

QLaurent z_degree_q(int d, int g) {
  if (g < 1)
    fail(ErrorKind::UnsupportedBackend,
         "the Q backend needs genus >= 1 (genus 0 has a t-pole)");
  if (d == 0) return QLaurent::one();
  QLaurent sum;
  for_each_partition(d, [&](const Partition& mu) {
    QLaurent prod = QLaurent::one();
    for (int h : hooklengths(mu).hooks) prod *= q_power_bracket(h, g);
    sum += prod;
  });
  return sum;
}

TLaurent z_degree_t(int d, int g, std::int64_t order) {
  if (g < 0) fail(ErrorKind::DomainError, "genus must be >= 0");
  std::int64_t trunc = trunc_after(order);
  if (d == 0) return TLaurent::one_to(trunc);
  // Multiplying d factors with poles at t^-2 into the unit accumulator costs
  // 2d orders of knowledge; pad so the result is still known through `order`.
  std::int64_t work = (g == 0) ? order + 2 * d : order;
  TLaurent sum = TLaurent::zero_to(trunc);
  for_each_partition(d, [&](const Partition& mu) {
    TLaurent prod = TLaurent::one_to(trunc_after(work));
    for (int h : hooklengths(mu).hooks) prod *= sin_half_power(h, g, work);
    sum += prod.truncated(trunc);
  });
  return sum;
}

}  // namespace reference

namespace kernels {

namespace {

// Dense integer Laurent polynomial: c[i] is the coefficient of Q^{min+i}.
struct Dense {
  std::int64_t min = 0;
  std::vector<Integer> c;
};

Dense conv(const Dense& a, const Dense& b) {
  Dense r;
  r.min = a.min + b.min;
  r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

// Powers of (Q + Q^{-1} - 2), computed once by repeated squaring and then
// shared read-only across threads.
std::vector<Dense> bracket_powers(int emax) {
  std::vector<Dense> pows(static_cast<std::size_t>(emax) + 1);
  pows[0] = Dense{0, {Integer(1)}};
  if (emax >= 1) pows[1] = Dense{-1, {Integer(1), Integer(-2), Integer(1)}};
  for (int e = 2; e <= emax; ++e) {
    const Dense& half = pows[static_cast<std::size_t>(e / 2)];
    Dense p = conv(half, half);
    if (e % 2 == 1) p = conv(p, pows[1]);
    pows[static_cast<std::size_t>(e)] = std::move(p);
  }
  return pows;
}

// acc *= pows[e] with exponents stretched by the hook value h
// (the group's factor is (Q^h + Q^{-h} - 2)^e).
Dense mul_stretched(const Dense& acc, const Dense& bp, std::int64_t h) {
  std::int64_t e = static_cast<std::int64_t>(bp.c.size() - 1) / 2;
  Dense r;
  r.min = acc.min - h * e;
  r.c.assign(acc.c.size() + static_cast<std::size_t>(2 * e * h), Integer(0));
  for (std::size_t i = 0; i < bp.c.size(); ++i) {
    std::size_t off = static_cast<std::size_t>(h) * i;
    for (std::size_t j = 0; j < acc.c.size(); ++j)
      r.c[j + off] += acc.c[j] * bp.c[i];
  }
  return r;
}

// Equal hooks grouped as (hook value, multiplicity), descending hooks.
std::vector<std::pair<int, int>> hook_groups(const HookMultiset& hooks) {
  std::vector<std::pair<int, int>> groups;
  for (int h : hooks.hooks) {
    if (!groups.empty() && groups.back().first == h)
      ++groups.back().second;
    else
      groups.emplace_back(h, 1);
  }
  return groups;
}

Dense hook_product_dense(const HookMultiset& hooks, int g,
                         const std::vector<Dense>& pows) {
  Dense acc{0, {Integer(1)}};
  for (auto [h, m] : hook_groups(hooks))
    acc = mul_stretched(acc, pows[static_cast<std::size_t>((g - 1) * m)], h);
  if (((g - 1) * hooks.size()) % 2 != 0)
    for (auto& x : acc.c) x = -x;
  return acc;
}

QLaurent to_qlaurent(const Dense& d) {
  QLaurent p;
  for (std::size_t i = 0; i < d.c.size(); ++i)
    if (sgn(d.c[i]) != 0)
      p.set_coeff(d.min + static_cast<std::int64_t>(i), Rational(d.c[i]));
  return p;
}

// One deduplicated unit of work: a hook multiset, how many partitions of
// `degree` share it, and (for the dense path) its product slot.
struct Item {
  HookMultiset hooks;
  int degree = 0;
  long count = 0;
};

std::vector<Item> collect_items(int D) {
  std::vector<Item> items;
  for (int d = 1; d <= D; ++d) {
    std::map<HookMultiset, long> dedup;
    for_each_partition(d, [&](const Partition& mu) { ++dedup[hooklengths(mu)]; });
    for (auto& [hooks, count] : dedup)
      items.push_back(Item{hooks, d, count});
  }
  return items;
}

template <class Work>
void run_items(std::size_t n, const ThreadPolicy& policy, const Work& work) {
#ifdef _OPENMP
  if (policy.threads >= 1) {
#pragma omp parallel for schedule(dynamic) num_threads(policy.threads)
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) work(i);
}

}  // namespace

QLaurent hook_product_q(const HookMultiset& hooks, int g) {
  if (g < 1)
    fail(ErrorKind::UnsupportedBackend,
         "the Q backend needs genus >= 1 (genus 0 has a t-pole)");
  int emax = (g - 1) * std::max(1, hooks.size());
  return to_qlaurent(hook_product_dense(hooks, g, bracket_powers(emax)));
}

TLaurent hook_product_t(const HookMultiset& hooks, int g, std::int64_t order) {
  if (g < 0) fail(ErrorKind::DomainError, "genus must be >= 0");
  // Each genus-0 factor has a t^-2 pole and costs two orders of knowledge.
  std::int64_t work = (g == 0) ? order + 2 * hooks.size() : order;
  TLaurent prod = TLaurent::one_to(trunc_after(work));
  for (auto [h, m] : hook_groups(hooks))
    prod *= sin_half_power(h, g, work).pow(m);
  return prod.truncated(trunc_after(order));
}

std::vector<QLaurent> z_coeffs_q(int D, int g, const ThreadPolicy& policy) {
  if (g < 1)
    fail(ErrorKind::UnsupportedBackend,
         "the Q backend needs genus >= 1 (genus 0 has a t-pole)");
  if (D < 0) fail(ErrorKind::DomainError, "q-degree must be >= 0");
  std::vector<Item> items = collect_items(D);
  std::vector<Dense> pows = bracket_powers((g - 1) * D);
  std::vector<Dense> prods(items.size());
  run_items(items.size(), policy, [&](std::size_t i) {
    prods[i] = hook_product_dense(items[i].hooks, g, pows);
  });
  // Deterministic assembly: items are in (degree, multiset) order.
  std::vector<QLaurent> out(static_cast<std::size_t>(D) + 1);
  out[0] = QLaurent::one();
  for (std::size_t i = 0; i < items.size(); ++i) {
    QLaurent p = to_qlaurent(prods[i]);
    out[static_cast<std::size_t>(items[i].degree)] +=
        p.scaled(Rational(items[i].count));
  }
  return out;
}

std::vector<TLaurent> z_coeffs_t(int D, int g, std::int64_t order,
                                 const ThreadPolicy& policy) {
  if (g < 0) fail(ErrorKind::DomainError, "genus must be >= 0");
  if (D < 0) fail(ErrorKind::DomainError, "q-degree must be >= 0");
  std::int64_t trunc = trunc_after(order);
  // A degree-d product multiplies d pole factors (2d orders of padding).
  std::int64_t work = (g == 0) ? order + 2 * D : order;
  // Per-hook factors, built once (hook values never exceed the degree).
  std::vector<TLaurent> table(static_cast<std::size_t>(D) + 1);
  for (int h = 1; h <= D; ++h)
    table[static_cast<std::size_t>(h)] = sin_half_power(h, g, work);
  std::vector<Item> items = collect_items(D);
  std::vector<TLaurent> prods(items.size());
  run_items(items.size(), policy, [&](std::size_t i) {
    TLaurent prod = TLaurent::one_to(trunc_after(work));
    for (auto [h, m] : hook_groups(items[i].hooks))
      prod *= table[static_cast<std::size_t>(h)].pow(m);
    prods[i] = prod.truncated(trunc);
  });
  std::vector<TLaurent> out(static_cast<std::size_t>(D) + 1,
                            TLaurent::zero_to(trunc));
  out[0] = TLaurent::one_to(trunc);
  for (std::size_t i = 0; i < items.size(); ++i)
    out[static_cast<std::size_t>(items[i].degree)] +=
        prods[i].scaled(Rational(items[i].count));
  return out;
}

}  // namespace kernels

}  // namespace gvkit
