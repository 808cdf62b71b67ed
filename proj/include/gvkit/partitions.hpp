// Integer partitions, hook lengths, and the partition counting function.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

// A partition of d: weakly decreasing positive parts summing to d.
struct Partition {
  std::vector<int> parts;

  int size() const;
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
};

// The multiset of hook lengths of a partition's Young diagram, stored as a
// weakly decreasing vector.  Its cardinality equals the partition's size,
// and conjugate partitions share the same multiset.
struct HookMultiset {
  std::vector<int> hooks;

  int size() const { return static_cast<int>(hooks.size()); }
  int max() const { return hooks.empty() ? 0 : hooks.front(); }

  friend bool operator==(const HookMultiset& a, const HookMultiset& b) {
    return a.hooks == b.hooks;
  }
  friend bool operator<(const HookMultiset& a, const HookMultiset& b) {
    return a.hooks < b.hooks;
  }
};

// All partitions of d (d >= 0) in reverse lexicographic order, so the first
// is the single row (d) and the last the single column (1, ..., 1).
std::vector<Partition> partitions_of(int d);

// Calls fn for each partition of d in the same order as partitions_of.
void for_each_partition(int d, const std::function<void(const Partition&)>& fn);

// Hook length of each cell: arm + leg + 1.
HookMultiset hooklengths(const Partition& p);

// Number of partitions of d, via Euler's pentagonal recurrence (memoized).
Integer partition_count(int d);

}  // namespace gvkit
