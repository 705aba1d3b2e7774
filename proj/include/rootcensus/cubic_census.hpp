#ifndef ROOTCENSUS_CUBIC_CENSUS_HPP
#define ROOTCENSUS_CUBIC_CENSUS_HPP

#include <optional>

#include "rootcensus/interval.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

// Census of monic integer cubics X^3 - A X^2 + B X - C with prescribed trace
// A and all roots real and positive (or nonnegative).  The (B, C) region is
// cut out by the discriminant window
//   Gminus(A, B) <= C <= Gplus(A, B),
//   Gpm(A, B) = (9AB - 2A^3 +- 2 (A^2 - 3B)^(3/2)) / 27,
// which is exactly the condition disc >= 0 once A^2 - 3B >= 0.

// Exact floor of Gplus / ceiling of Gminus; requires A^2 - 3B >= 0.
Int floor_gplus(const Int& a, const Int& b);
Int ceil_gminus(const Int& a, const Int& b);

// Number of integer pairs (B, C) with all roots of X^3 - AX^2 + BX - C real
// and strictly positive; A >= 0.
Int count_P3_plus(const Int& a);
// Partial sum of the same census over B in [b_lo, b_hi], clamped to the valid
// window [1, floor(A^2/3)].  Summing disjoint ranges that cover the window
// reproduces count_P3_plus, which is how the parallel path partitions the
// outer loop.
Int count_P3_plus_range(const Int& a, const Int& b_lo, const Int& b_hi);
// Same with roots allowed to be zero.
Int count_P3_zeroplus(const Int& a);

struct RationalScaling {
  Rat alpha, beta, gamma;  // all positive
};

// Pairs (B, C) such that X^3 - (alpha A) X^2 + (beta B) X - (gamma C) has all
// roots real and positive (strict) or nonnegative (!strict).
Int count_P3_scaled(const Int& a, const RationalScaling& s, bool strict);

// Main term alpha^5 A^5 / (480 beta gamma) and the error budget
//   strict:  (a^3/g) A^3 + (1/b + 1/g) a^2 A^2 + (a b / g) A
//   nonneg:  (a^3/g) A^3 + (2/b + 1/g) a^2 A^2 + (a b / g) A
// with (a, b, g) = (alpha, beta, gamma).
struct MainTermError {
  Rat main;
  Rat budget;
};
MainTermError main_term_and_error(const Int& a, const RationalScaling& s, bool strict);

// Integers C with 0 <= disc(X^3 - AX^2 + BX - C) <= D.
Int count_P3_bounded_disc(const Int& a, const Int& b, const Int& d);

// Upper bounds for the bounded-discriminant count: the piecewise bound
//   4/27 (A^2-3B)^(3/2)            if D >= 4/27 (A^2-3B)^3
//   D / (A^2-3B)^(3/2)             otherwise
// (defined only when A^2 - 3B >= 0) and the global bound 2/(3 sqrt 3) sqrt(D).
// Both bound the measure of { C real : 0 <= disc <= D }.  That set is a single
// closed interval in the first regime and splits into two boundary strips in
// the second, so the integer count can exceed a bound by the number of pieces;
// callers should allow slack of `pieces`.  (On coarse D grids a flat +1 is
// usually enough, but it is not a theorem: (A,B,D) = (6,5,49) has two members
// against a piecewise bound of 0.51.)
struct W1Bounds {
  std::optional<CertifiedReal> piecewise;  // absent when A^2 - 3B < 0
  CertifiedReal global;
  int pieces = 1;  // connected components of the sublevel region (1 or 2)
};
W1Bounds w1_upper_bound(const Int& a, const Int& b, const Int& d, mpfr_prec_t prec = 128);

}  // namespace rootcensus

#endif
