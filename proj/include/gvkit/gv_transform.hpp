// The BPS change of basis between Gromov-Witten series and BPS tables,
// the Fano variant, and the Aspinwall-Morrison genus-zero transform.
#pragma once

#include <cstdint>
#include <vector>

#include "gvkit/novikov.hpp"

namespace gvkit {

// GW_{A,g} = sum over (B,h,k) with kB = A of (n_{B,h}/k) times the
// t^{2g-2}-coefficient of (2 sin(kt/2))^{2h-2}; truncated at (energy, gmax),
// which must not exceed the window of n.
NovikovSeries bps_forward(const BpsTable& n, const Rational& energy, int gmax,
                          std::int64_t t_order);

// Inverse transform: ascending-area sweep subtracting k >= 2 cover
// contributions from already-solved divisor classes, then the unit
// lower-triangular h-solve per class.  Output window equals the input's.
BpsTable bps_invert(const NovikovSeries& gw, std::int64_t t_order);

// A Gromov-Witten series whose classes carry a first Chern number given by
// the linear form `chern`; `insertions` lists the (fixed) constraint
// dimensions and only identifies the series.
struct FanoSeries {
  NovikovSeries series;
  Coords chern;
  std::vector<int> insertions;
};

std::int64_t chern_of(const Coords& chern, const Coords& a);

// Per-class triangular solve with basis (2 sin(t/2))^{c1+2g-2} t^{-c1};
// classes decouple (no multiple-cover mixing).  Every class needs c1 > 0.
BpsTable fano_invert(const FanoSeries& f, std::int64_t t_order);
NovikovSeries fano_forward(const BpsTable& n, const Coords& chern,
                           std::int64_t t_order);

// Genus-zero transform with k-insertion cover weights d^{k-3} (exact
// rationals for k < 3).  Tables carry genus index 0 only.
TermTable am_invert(const TermTable& gw0, int insertions);
TermTable am_forward(const TermTable& n0, int insertions);

// iota = 2 c1(A) + (dimX - 6)(1 - g) + 2k - sum(dim gamma_i).
std::int64_t expected_dimension(std::int64_t c1A, int dimX, int g,
                                const std::vector<int>& insertion_dims);

// M[g][h] = [t^{2g-2}] (2 sin(kt/2))^{2h-2} for 0 <= g,h <= gmax; the k = 1
// matrix is unit lower triangular (the triangularity witness).
std::vector<std::vector<Rational>> bps_kernel_matrix(long k, int gmax,
                                                     std::int64_t t_order);
// F[g][h] = [t^{2g-2}] (2 sin(t/2))^{c1+2h-2} t^{-c1}, also unit triangular.
std::vector<std::vector<Rational>> fano_kernel_matrix(long c1, int gmax,
                                                      std::int64_t t_order);

// Splits a series by the sign of c1(A): first component the c1 = 0 part,
// second the c1 > 0 part; a class with c1 < 0 is a domain error.
std::pair<NovikovSeries, NovikovSeries> split_by_chern(
    const NovikovSeries& gw, const Coords& chern);

// Shared machinery of the ascending-area eliminations (also used by the
// structure solver): the sweep set contains every divisor class of the
// support together with all multiples inside the energy window, and is
// closed under taking divisor classes.
std::vector<Coords> inversion_sweep(const TermTable& t);
// Defensive witness of the divisor-closure precondition; with positive
// area weights an energy window satisfies it by construction.
void check_divisor_closed(const TermTable& t);

}  // namespace gvkit
