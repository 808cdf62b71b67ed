// Curve classes with rational area weights, and truncated coefficient
// tables over the Novikov variables q^A.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

// Coordinates of a curve class in a fixed basis of the lattice.
using Coords = std::vector<std::int64_t>;

// Rank of the lattice plus one strictly positive area weight per coordinate;
// the (symplectic) area of a class is the weighted sum of its coordinates.
struct LatticeContext {
  int rank = 1;
  std::vector<Rational> weights;

  static std::shared_ptr<const LatticeContext> make(
      int rank, std::vector<Rational> weights);
  // Convenience: rank-1 context with weight 1.
  static std::shared_ptr<const LatticeContext> line();

  Rational area(const Coords& a) const;
  bool same_as(const LatticeContext& o) const {
    return rank == o.rank && weights == o.weights;
  }
};

// Divisibility degree: gcd of the coordinates.  Errors on the zero class.
std::int64_t degree(const Coords& a);
// Number of prime factors counted with multiplicity (so big_omega(1) == 0).
int big_omega(std::int64_t d);
// Elimination level of the pair (A, g): big_omega(degree(A)) + g.
int level(const Coords& a, int g);
// All factorizations A = k * B with integer k >= 1 and B a lattice class,
// in ascending k; k runs over the divisors of degree(A).
std::vector<std::pair<std::int64_t, Coords>> divisor_pairs(const Coords& a);

// A truncated table (class, index) -> coefficient.  Stores only terms with
// area(A) <= energy and index <= index_max; within that window an absent
// term is exactly zero, outside of it coefficients are unknown.  The index
// is the genus g for Gromov-Witten series and the BPS genus h for BPS
// tables.  Iteration order is canonical: ascending area, then lexicographic
// coordinates, then ascending index.
class TermTable {
 public:
  struct Key {
    Rational area;  // cached, determines the leading comparison
    Coords coords;
    int index;
  };
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      if (a.area != b.area) return a.area < b.area;
      if (a.coords != b.coords) return a.coords < b.coords;
      return a.index < b.index;
    }
  };
  using Terms = std::map<Key, Rational, KeyOrder>;

  TermTable(std::shared_ptr<const LatticeContext> ctx, Rational energy,
            int index_max);

  const LatticeContext& context() const { return *ctx_; }
  const std::shared_ptr<const LatticeContext>& context_ptr() const {
    return ctx_;
  }
  const Rational& energy() const { return energy_; }
  int index_max() const { return index_max_; }

  bool in_window(const Coords& a, int index) const;

  // Bounds-checked writes: the class must be valid (correct rank, positive
  // area) and inside the window.  Zero values erase the entry.
  void set(const Coords& a, int index, const Rational& c);
  void add(const Coords& a, int index, const Rational& c);

  // Exact coefficient; zero if absent, error if outside the window.
  Rational coeff(const Coords& a, int index) const;

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // The distinct classes appearing in the table, in canonical order.
  std::vector<Coords> support_classes() const;

  TermTable& operator+=(const TermTable& o);  // bounds shrink to the min
  TermTable scaled(const Rational& c) const;
  // Shrinks the window; widening is unsound and errors.
  TermTable truncated(const Rational& energy, int index_max) const;

  friend bool operator==(const TermTable& a, const TermTable& b);
  friend bool operator!=(const TermTable& a, const TermTable& b) {
    return !(a == b);
  }

 private:
  void check_class(const Coords& a, int index, Rational* area_out) const;

  std::shared_ptr<const LatticeContext> ctx_;
  Rational energy_;
  int index_max_;
  Terms terms_;
};

// A Gromov-Witten generating series: index is the genus.
using NovikovSeries = TermTable;
// A BPS table: index is the BPS genus h.
using BpsTable = TermTable;

}  // namespace gvkit
