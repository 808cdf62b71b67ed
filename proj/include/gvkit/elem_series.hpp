// The elementary-cluster series Z^elem_g, its logarithm GW^elem_g, the
// integer Q-coefficients A_{n,d}, and the local BPS numbers n_{d,h}(g).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gvkit/kernels.hpp"

namespace gvkit {

// Q: exact Laurent polynomials in Q = e^{it}, available for genus >= 1.
// T: truncated t-series, available for every genus (required for genus 0).
enum class Backend { Q, T };

struct ElemSeries {
  int genus = 0;
  int q_degree = 0;
  Backend backend = Backend::Q;
  std::int64_t t_order = 0;  // t-backend only
  bool is_log = false;       // false: Z^elem, true: GW^elem
  std::vector<QLaurent> q_coeffs;
  std::vector<TLaurent> t_coeffs;

  const QLaurent& qc(int d) const;
  const TLaurent& tc(int d) const;
};

// Default t-order: covers the vanishing bound h <= D^2(g-1) + 1 for g >= 2
// and a fixed window for the closed-form cases g <= 1.
std::int64_t default_t_order(int g, int D);

ElemSeries z_elem(int g, int D, Backend backend, std::int64_t t_order = -1,
                  const ThreadPolicy& policy = {});
ElemSeries gw_elem(int g, int D, Backend backend, std::int64_t t_order = -1,
                   const ThreadPolicy& policy = {});

// GW^elem_g as t-series coefficients (index = q-degree), exact through
// `order`.  Genus >= 1 is computed on the Q backend and converted; memoized.
std::vector<TLaurent> gw_elem_t(int g, int D, std::int64_t order,
                                const ThreadPolicy& policy = {});

// Formal log/exp on vectors of q-coefficients (entry 0 is the constant
// term); exposed for round-trip testing.
std::vector<QLaurent> series_log_q(const std::vector<QLaurent>& z);
std::vector<QLaurent> series_exp_q(const std::vector<QLaurent>& gw);
std::vector<TLaurent> series_log_t(const std::vector<TLaurent>& z);
std::vector<TLaurent> series_exp_t(const std::vector<TLaurent>& gw);

// The integer matrix A_{n,d} with Z^elem_g = sum A_{n,d} Q^n q^d (g >= 1).
// A non-integer coefficient would be an internal-consistency failure.
std::map<std::pair<std::int64_t, int>, Integer> q_coefficients(
    int g, int D, const ThreadPolicy& policy = {});

struct LocalBps {
  int genus = 0;
  int q_degree = 0;
  int h_max = 0;
  std::map<std::pair<int, int>, Rational> table;  // (d, h); zeros omitted

  Rational at(int d, int h) const;
};

// Inverts the BPS transform on GW^elem_g over a rank-1 lattice.  The t-order
// determines the solvable h-window: the largest h_max with 2 h_max + 2 <=
// t_order, so the default order covers exactly the vanishing bound.
LocalBps local_bps(int g, int D, std::int64_t t_order = -1,
                   const ThreadPolicy& policy = {});

struct LocalViolation {
  int d = 0;
  int h = 0;
  Rational value;
  std::string rule;
};

struct LocalReport {
  int genus = 0;
  int q_degree = 0;
  int h_max = 0;
  bool pass = false;
  LocalBps bps;
  std::vector<LocalViolation> violations;
};

// Verifies the local integrality and vanishing laws: every n_{d,h}(g) an
// integer, zero for h < g and for h - 1 > d^2 (g - 1), and the closed-form
// supports for genus 0 ({(1,0)} with value 1) and genus 1 ({(d,1)} with
// value 1).  Failures are report entries, never errors.
LocalReport check_local_bps(int g, int D, std::int64_t t_order = -1,
                            const ThreadPolicy& policy = {});

}  // namespace gvkit
