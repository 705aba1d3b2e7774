#ifndef ROOTCENSUS_ROBINSON_HPP
#define ROOTCENSUS_ROBINSON_HPP

#include <optional>
#include <vector>

#include "rootcensus/numeric.hpp"
#include "rootcensus/polynomial.hpp"

namespace rootcensus {

// Interlacing enumeration of monic integer polynomials with fixed trace and
// all roots real and positive (or nonnegative), degree by degree along the
// normalized derivative chain
//   P_k(X) = sum_j (-1)^j [C(k,j)/C(n,j)] A_j X^(k-j) = ((n-k)!/n!) f^(n-k),
// so P_k' = k P_(k-1) and each level k contributes the single new integer
// coefficient A_k.

struct DerivativeChainLevel {
  int n = 0;                // ambient degree
  int k = 0;                // level, 2..n
  std::vector<Int> prefix;  // A_1..A_(k-1)

  DerivativeChainLevel(int n_, int k_, std::vector<Int> prefix_);

  // P_k without its constant term (the part determined by the prefix);
  // monic of degree k, vanishing at 0.
  RatPoly constant_free_part() const;
  // P_(k-1), constant term included; monic of degree k-1.
  RatPoly previous_level() const;
};

// Closed interval with optional (absent = unbounded) endpoints.
struct RatInterval {
  std::optional<Rat> lo, hi;
};

// Interval of admissible integer coefficients A_k at this level, in A_k
// coordinates: a superset of { A_k : P_k has all roots real and >= 0 },
// obtained by evaluating P_k on the ordered critical points beta_1 >= ... >=
// beta_(k-1) (roots of P_(k-1), with multiplicity) and scaling the resulting
// constant-term window by (-1)^(k+1) C(n,k).  Endpoint values are exact
// rationals when certified equal to an integer or attained at a rational
// critical point; otherwise they are outward-rounded enclosure bounds refined
// far enough that ceil(lo) and floor(hi) are the true integer bounds.
// nullopt when the window is certainly empty (dead end); requires P_(k-1) to
// have all roots real and >= 0 (returns nullopt otherwise).
std::optional<RatInterval> admissible_constant_interval(const DerivativeChainLevel& level);

// All monic degree-n integer polynomials with trace A and every root real and
// positive (strict) or nonnegative (!strict), sorted lexicographically by
// (A_2, ..., A_n).  Depth-first over the chain levels; every candidate passes
// the exact root filter, the windows only prune.
std::vector<MonicIntPoly> enumerate_positive_real_monic(int n, const Int& a, bool strict);

Int count_positive_real_monic(int n, const Int& a, bool strict);

// Number of (A_2, A_3) pairs such that the degree-3 front of the chain for a
// degree-n polynomial with trace A has all roots real and nonnegative, i.e.
// the scaled cubic census with alpha = 3/n, beta = 6/(n(n-1)),
// gamma = 6/(n(n-1)(n-2)); n >= 4.
Int count_prefix3(int n, const Int& a);

}  // namespace rootcensus

#endif
