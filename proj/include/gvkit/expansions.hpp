// Series expansions of the trigonometric building blocks.
//
// All t-series producers take `order`: coefficients of t^e for e <= order are
// computed, so the result's known_to() is the first even integer above order.
#pragma once

#include <cstdint>

#include "gvkit/qlaurent.hpp"
#include "gvkit/tlaurent.hpp"

namespace gvkit {

// First even integer strictly above `order`.
inline std::int64_t trunc_after(std::int64_t order) {
  return (order % 2 == 0) ? order + 2 : order + 1;
}

// (2 sin(kt/2))^2 = 2 - 2 cos(kt); exponents 2, 4, ...
TLaurent sin_sq_series(long k, std::int64_t order);

// (2 sin(kt/2))^{2h-2}, h >= 0.  h = 0 is the inverse square, with a double
// pole: exponents -2, 0, 2, ...  Leading coefficient is k^{2h-2}.
TLaurent sin_half_power(long k, long h, std::int64_t order);

// E(t) = 2 sin(t/2) / t = sum_m (-1)^m t^{2m} / (4^m (2m+1)!), a unit.
TLaurent unit_sine_series(std::int64_t order);

// (-1)^{h-1} (Q^k + Q^{-k} - 2)^{h-1} for h >= 1, a symmetric Q-Laurent
// polynomial.  Equals (2 sin(kt/2))^{2h-2} under Q = e^{it}.
QLaurent q_power_bracket(long k, long h);

// Substitute Q = e^{it} into a symmetric Q-Laurent polynomial:
// Q^n + Q^{-n} becomes 2 cos(nt).  Errors if the input is not symmetric.
TLaurent q_to_t(const QLaurent& p, std::int64_t order);

}  // namespace gvkit
