#include "gvkit/structure_solver.hpp"

#include <algorithm>
#include <cstdint>

#include "gvkit/errors.hpp"
#include "gvkit/expansions.hpp"

namespace gvkit {

namespace {

void check_solver_t_order(int gmax, std::int64_t t_order) {
  if (t_order < 2 * static_cast<std::int64_t>(gmax) + 2)
    fail(ErrorKind::InvalidTruncation,
         "t-order " + std::to_string(t_order) +
             " is too small for genus bound " + std::to_string(gmax) +
             " (need at least " + std::to_string(2 * gmax + 2) + ")");
}

}  // namespace

ElemCounts solve_elem_counts(const NovikovSeries& gw, std::int64_t t_order,
                             const ThreadPolicy& policy) {
  const int gmax = gw.index_max();
  check_solver_t_order(gmax, t_order);
  check_divisor_closed(gw);

  const std::vector<Coords> sweep = inversion_sweep(gw);
  int d_max = 1;
  for (const Coords& a : sweep)
    d_max = std::max(d_max, static_cast<int>(degree(a)));

  // w(g', d, g) = [q^d t^{2g-2}] GW^elem_{g'}: the genus-g GW contribution
  // in class d B of one genus-g' elementary cluster in class B.  Lattice
  // independent, so one table per source genus serves every class.
  std::vector<std::vector<TLaurent>> w;
  w.reserve(gmax + 1);
  for (int gp = 0; gp <= gmax; ++gp)
    w.push_back(gw_elem_t(gp, d_max, t_order, policy));

  ElemCounts out(gw.context_ptr(), gw.energy(), gmax);
  for (const Coords& a : sweep) {
    for (int g = 0; g <= gmax; ++g) {
      Rational v = gw.coeff(a, g);
      // Covers of proper divisor classes (level drops via big_omega)...
      for (const auto& [d, b] : divisor_pairs(a)) {
        if (d < 2) continue;
        for (int gp = 0; gp <= g; ++gp) {
          Rational e = out.coeff(b, gp);
          if (!e.is_zero()) v -= e * w[gp][d].coeff(2 * g - 2);
        }
      }
      // ...and lower-genus clusters in the class itself (level drops via g).
      for (int gp = 0; gp < g; ++gp) {
        Rational e = out.coeff(a, gp);
        if (!e.is_zero()) v -= e * w[gp][1].coeff(2 * g - 2);
      }
      out.add(a, g, v);
    }
  }
  return out;
}

BpsTable assemble_bps(const ElemCounts& e, int d_local, std::int64_t t_order,
                      const ThreadPolicy& policy) {
  const int gmax = e.index_max();
  check_solver_t_order(gmax, t_order);
  if (d_local < 1) fail(ErrorKind::DomainError, "local q-degree must be >= 1");

  // Local BPS tables per cluster genus.  The requested t-order bounds the
  // usable h-window, and h <= gmax is all the window the output can
  // soundly carry: an n_{A,h} with h > gmax would draw on counts e_{B,g}
  // with g > gmax that the input does not determine.
  std::vector<LocalBps> local;
  local.reserve(gmax + 1);
  for (int g = 0; g <= gmax; ++g)
    local.push_back(local_bps(g, d_local, t_order, policy));

  BpsTable out(e.context_ptr(), e.energy(), gmax);
  for (const auto& [key, val] : e.terms()) {
    const int g = key.index;
    for (std::int64_t d = 1;; ++d) {
      Coords da = key.coords;
      for (auto& x : da) x *= d;
      if (e.context().area(da) > e.energy()) break;
      if (d > d_local)
        fail(ErrorKind::IncompleteLocalData,
             "cover degree " + std::to_string(d) +
                 " exceeds the available local tables (through degree " +
                 std::to_string(d_local) + ")");
      for (int h = g; h <= gmax; ++h) {
        Rational n = local[g].at(static_cast<int>(d), h);
        if (!n.is_zero()) out.add(da, h, val * n);
      }
    }
  }
  return out;
}

std::vector<std::pair<Coords, int>> non_integral_terms(const TermTable& t) {
  std::vector<std::pair<Coords, int>> out;
  for (const auto& [key, val] : t.terms())
    if (!val.is_integer()) out.emplace_back(key.coords, key.index);
  return out;
}

PipelineReport full_pipeline(const NovikovSeries& gw, std::int64_t t_order,
                             const ThreadPolicy& policy) {
  ElemCounts elem = solve_elem_counts(gw, t_order, policy);

  // Deepest cover degree any supported class can reach inside the window
  // fixes how far the local tables must go.
  int d_local = 1;
  for (const Coords& b : elem.support_classes()) {
    std::int64_t d = 1;
    while (true) {
      Coords db = b;
      for (auto& x : db) x *= (d + 1);
      if (elem.context().area(db) > elem.energy()) break;
      ++d;
    }
    d_local = std::max(d_local, static_cast<int>(d));
  }

  BpsTable assembled = assemble_bps(elem, d_local, t_order, policy);
  BpsTable direct = bps_invert(gw, t_order);
  if (assembled != direct)
    fail(ErrorKind::InternalConsistency,
         "assembled BPS table disagrees with direct inversion");

  PipelineReport report{std::move(elem), std::move(assembled), false, false};
  report.elem_integral = non_integral_terms(report.elem).empty();
  report.bps_integral = non_integral_terms(report.bps).empty();
  return report;
}

}  // namespace gvkit
