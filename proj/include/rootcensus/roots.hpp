#ifndef ROOTCENSUS_ROOTS_HPP
#define ROOTCENSUS_ROOTS_HPP

#include <vector>

#include "rootcensus/polynomial.hpp"

namespace rootcensus {

// Sturm chain of a squarefree rational polynomial.
struct SturmChain {
  std::vector<RatPoly> seq;

  int variations_at(const Rat& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  // Distinct real roots in the half-open interval (a, b]; requires that a and
  // b are not roots of the first chain element for the textbook count, which
  // holds for the callers here (endpoints checked or beyond root bounds).
  int count_in(const Rat& a, const Rat& b) const;
  int count_real() const;
  // Roots in (0, +inf).
  int count_positive() const;
};

SturmChain build_sturm(const RatPoly& g);

// One isolated real root: either an exact rational point (lo == hi) or an
// open interval (lo, hi) containing exactly one root of `factor`, with
// factor(lo) != 0 != factor(hi).  `factor` is squarefree; `multiplicity` is
// the root's multiplicity in the original polynomial.
struct RootInterval {
  Rat lo, hi;
  int multiplicity = 1;
  IntPoly factor;

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  // Halve the interval (or collapse to a point when the midpoint is the
  // root).  No-op on points.
  void refine_once();
  void refine_below_width(const Rat& w);
  // The root is > 0: a point root must itself be positive; an open interval
  // only needs a nonnegative left endpoint (the root lies strictly inside).
  bool certainly_positive() const { return is_point() ? sgn(lo) > 0 : sgn(lo) >= 0; }
};

struct IsolatedRoots {
  // Sorted increasing, pairwise disjoint.
  std::vector<RootInterval> roots;

  int distinct_count() const { return static_cast<int>(roots.size()); }
  int total_multiplicity() const;
};

// Isolates all real roots of f (not identically zero) with multiplicities.
IsolatedRoots isolate_real_roots(const IntPoly& f);

// Exact decision procedures.  Nonstrict means all roots real and >= 0;
// strict means all roots real and > 0.  Constants are vacuously true.
bool all_roots_real(const IntPoly& f);
bool all_roots_real_nonneg(const IntPoly& f);
bool all_roots_real_positive(const IntPoly& f, bool strict);
bool all_roots_real_positive(const MonicIntPoly& f, bool strict);

}  // namespace rootcensus

#endif
