// Extraction of the elementary-cluster counts e_{A,g} from a truncated GW
// series and reassembly of the global BPS table from local data.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gvkit/elem_series.hpp"
#include "gvkit/gv_transform.hpp"

namespace gvkit {

// (A, g) -> e_{A,g}: the multiplicity of the genus-g elementary cluster
// in class A.  Same window semantics as the GW series it came from.
using ElemCounts = TermTable;

// Solves for the e_{A,g} by ascending-level elimination: classes in
// ascending (area, lex) order, genus ascending within a class.  Each
// e_{A,g} is the GW coefficient minus the contributions of all lower-level
// counts through GW^elem.  Requires t_order >= 2 * index_max + 2.
ElemCounts solve_elem_counts(const NovikovSeries& gw, std::int64_t t_order,
                             const ThreadPolicy& policy = {});

// Assembles the BPS table n_{A,h} = sum over A = d B, g <= h of
// e_{B,g} n_{d,h}(g) from local tables computed through q-degree d_local.
// The output window is h <= e.index_max(): higher h would need counts
// beyond the input's genus bound.  A cover degree past d_local raises
// IncompleteLocalData.
BpsTable assemble_bps(const ElemCounts& e, int d_local, std::int64_t t_order,
                      const ThreadPolicy& policy = {});

// The (class, index) pairs whose coefficient is not an integer, in
// canonical table order.
std::vector<std::pair<Coords, int>> non_integral_terms(const TermTable& t);

struct PipelineReport {
  ElemCounts elem;
  BpsTable bps;
  bool elem_integral = false;
  bool bps_integral = false;
};

// End-to-end run: extract the e_{A,g}, assemble the BPS table from local
// data, and cross-check it against direct inversion of the GW series.  A
// mismatch between the two paths raises InternalConsistency.
PipelineReport full_pipeline(const NovikovSeries& gw, std::int64_t t_order,
                             const ThreadPolicy& policy = {});

}  // namespace gvkit
