#include "gvkit/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace gvkit {

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  c.parts.assign(static_cast<std::size_t>(parts[0]), 0);
  for (int part : parts)
    for (int j = 0; j < part; ++j) ++c.parts[static_cast<std::size_t>(j)];
  return c;
}

void for_each_partition(int d,
                        const std::function<void(const Partition&)>& fn) {
  if (d < 0) fail(ErrorKind::DomainError, "partitions of a negative integer");
  Partition cur;
  // Recursive descent emits parts in weakly decreasing order; the largest
  // first part is tried first, which yields reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      fn(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.parts.push_back(part);
      rec(rest - part, part);
      cur.parts.pop_back();
    }
  };
  rec(d, d);
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  for_each_partition(d, [&](const Partition& p) { out.push_back(p); });
  return out;
}

HookMultiset hooklengths(const Partition& p) {
  HookMultiset h;
  Partition conj = p.conjugate();
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (int j = 0; j < p.parts[i]; ++j) {
      int arm = p.parts[i] - (j + 1);
      int leg = conj.parts[static_cast<std::size_t>(j)] - (static_cast<int>(i) + 1);
      h.hooks.push_back(arm + leg + 1);
    }
  std::sort(h.hooks.begin(), h.hooks.end(), std::greater<int>());
  return h;
}

Integer partition_count(int d) {
  if (d < 0) fail(ErrorKind::DomainError, "partitions of a negative integer");
  static std::mutex mu;
  static std::vector<Integer> memo{1};  // p(0) = 1
  std::lock_guard<std::mutex> lock(mu);
  for (int n = static_cast<int>(memo.size()); n <= d; ++n) {
    Integer s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      s += sign * memo[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * memo[static_cast<std::size_t>(n - g2)];
    }
    memo.push_back(s);
  }
  return memo[static_cast<std::size_t>(d)];
}

}  // namespace gvkit
