#ifndef ROOTCENSUS_MACLAURIN_HPP
#define ROOTCENSUS_MACLAURIN_HPP

#include <map>
#include <utility>
#include <vector>

#include "rootcensus/interval.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

// A positive real number represented as a finite product of primes raised to
// rational exponents.  Closed under multiplication and rational powers, with
// exact equality, so identities between products of the form D^(p/q) can be
// checked symbolically instead of numerically.
class ExponentVector {
 public:
  static ExponentVector one() { return {}; }
  static ExponentVector from_int(const Int& v);  // v >= 1
  static ExponentVector from_rat(const Rat& q);  // q > 0

  ExponentVector pow(const Rat& e) const;
  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }

  // All exponents integral, hence the value is rational.
  bool is_rational() const;
  Rat to_rat() const;  // requires is_rational()

  // Sign of log(value): -1, 0, +1.  Exact for one-sided exponent signs,
  // otherwise resolved by interval refinement (a nontrivial product of prime
  // powers never equals 1).
  int compare_one() const;
  bool less_than(const ExponentVector& o) const;

  Interval to_interval(mpfr_prec_t prec) const;
  CertifiedReal to_certified(mpfr_prec_t prec = 128) const;

  const std::map<long, Rat>& exponents() const { return e_; }

 private:
  std::map<long, Rat> e_;  // prime -> nonzero exponent
};

// Entries B_1..B_{n-1} of the per-level growth bounds A_{k+1} <= B_k A_k^{(k+1)/k}.
// Kept as exponent vectors because the binomial specialization needs entries
// like binom(n,k+1)/binom(n,k)^{(k+1)/k}, which are irrational.
struct BSequence {
  int n = 0;
  std::vector<ExponentVector> entries;

  static BSequence from_rats(int n, const std::vector<Rat>& b);
  static BSequence binomial(int n);
};

// #{(A_2,...,A_n) in {1,2,...}^{n-1} : A_{k+1} <= B_k A_k^{(k+1)/k}}, exact.
Int count_SB(const Int& a, const BSequence& bs);

// #{(A_2,...,A_n) in {1,2,...}^{n-1} : (A_k/binom(n,k))^{1/k} nonincreasing in k},
// decided by the cleared comparison A_k^{k+1} binom(n,k+1)^k >= A_{k+1}^k binom(n,k)^{k+1}.
Int count_attainable(int n, const Int& a);

// Leading constant (exact) and error constant (certified) of the binomial
// census: count ~ phi A^{(n-1)(n+2)/2} + O(psi A^{(n-1)(n+2)/2 - 2}).
std::pair<Rat, CertifiedReal> phi_psi_binomial(int n);

struct PhiPsi {
  CertifiedReal phi;
  CertifiedReal psi;
};
// Same constants for a general B-sequence.  The psi here reproduces the
// printed closed form, whose derivation absorbs a phi-term into psi and is
// only an upper bound when the entries are at most about 1; see the tests for
// a large-entry witness where it undercounts the true error.
PhiPsi phi_psi_general(const BSequence& bs);

// Exponent ladders of the nested summation: t_k for k = 0..n-1 and u_k for
// k = 1..n-1, both as exact rationals satisfying their defining recurrences.
std::vector<Rat> t_sequence(int n);
std::vector<Rat> u_sequence(int n);

// For E_k = D_{k+1}/D_k^{(k+1)/k} checks the two telescoping identities
//   prod E_k^{(n-k)(n+k+1)/(2(k+1))} = D_1^{-(n-1)(n+2)/2} prod_{k>=2} D_k
//   prod E_k^{(n-k-1)(n+k+2)/(2(k+1))} prod max{1, E_k^{-1/(k+1)}}
//     = D_{n-1} D_1^{1-(n-1)(n+2)/2} prod_{k<=n-2} D_k
//       prod_{k<=n-2} max{D_k^{1/k}, D_{k+1}^{1/(k+1)}}
// by exact exponent-vector equality.  ds lists D_1..D_n.
bool check_simplification(const std::vector<Rat>& ds);

// prod_{k=1}^{n-3} binom(n,k) * (prod_{k=3}^n k^k)^{1/2} * (3C)^E * M^E with
// E = (n^2+n-6)/2, M = max{|A1|/n, (|A2|/(n(n-1)))^{1/2}} and C = 160 e^7.
// Zero exactly when A1 = A2 = 0.
CertifiedReal tao_upper_bound(int n, const Int& a1, const Int& a2);

// For exact rational roots, verifies |s_k|^{1/k} <= C max_{j in {l,l+1}}
// (k/j)^{1/2} |s_j|^{1/j} for all 1 <= l < k <= n, with s_k the k-th
// elementary symmetric mean and C = 160 e^7.  Decided by clearing to integer
// powers against a certified enclosure of C.
bool tao_inequality_check(const std::vector<Rat>& roots);

}  // namespace rootcensus

#endif
