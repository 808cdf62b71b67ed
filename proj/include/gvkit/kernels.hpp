// Evaluation kernels for the elementary-cluster product formula.
//
// The same per-degree sums are implemented twice: `reference` is a
// straightforward partition-by-partition evaluation kept as a testing
// oracle; `kernels` groups partitions by hook multiset, works on dense
// integer arrays, and can distribute the per-partition products over OpenMP
// threads.  Both produce identical exact results.
#pragma once

#include <cstdint>
#include <vector>

#include "gvkit/partitions.hpp"
#include "gvkit/qlaurent.hpp"
#include "gvkit/tlaurent.hpp"

namespace gvkit {

// threads == 0 selects the sequential code path (the reproducibility
// default); threads >= 1 runs the OpenMP kernels with that many threads.
struct ThreadPolicy {
  int threads = 0;

  // Reads GVKIT_THREADS (unset or "0" means sequential).
  static ThreadPolicy from_env();
};

namespace reference {

// Coefficient of q^d in Z^elem_g: sum over partitions of d of the per-box
// product of (2 sin(h(box) t/2))^{2g-2}.  Q-backend needs g >= 1.
QLaurent z_degree_q(int d, int g);
// t-backend analogue; the result is known through `order` exactly.
TLaurent z_degree_t(int d, int g, std::int64_t order);

}  // namespace reference

namespace kernels {

// Per-box product over one hook multiset.
QLaurent hook_product_q(const HookMultiset& hooks, int g);
TLaurent hook_product_t(const HookMultiset& hooks, int g, std::int64_t order);

// Coefficients of q^0 .. q^D of Z^elem_g.  Q-backend needs g >= 1; the
// t-backend truncates every coefficient at trunc_after(order) exactly.
std::vector<QLaurent> z_coeffs_q(int D, int g, const ThreadPolicy& policy);
std::vector<TLaurent> z_coeffs_t(int D, int g, std::int64_t order,
                                 const ThreadPolicy& policy);

}  // namespace kernels

}  // namespace gvkit
