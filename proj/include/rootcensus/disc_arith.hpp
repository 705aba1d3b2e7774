#ifndef ROOTCENSUS_DISC_ARITH_HPP
#define ROOTCENSUS_DISC_ARITH_HPP

#include <utility>
#include <vector>

#include "rootcensus/interval.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

// Arithmetic of discriminants: root counts of quadratics modulo prime squares,
// square-free sieve brackets, and censuses of cubics whose discriminant is
// square-free or has few prime factors.  Factorization is exact for
// |m| <= 10^18: trial division by a fixed prime table, then deterministic
// Miller-Rabin plus Brent's variant of the rho method for what remains.

struct QuadPoly {
  Int A, B, C;
  Int delta;  // B^2 - 4AC, fixed at construction

  QuadPoly(Int a, Int b, Int c)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), delta(B * B - 4 * A * C) {}

  Int eval(const Int& x) const { return (A * x + B) * x + C; }
};

// Prime factors of |m| in increasing order, with multiplicity.  m = 0 or
// |m| > 10^18 is a domain error.
std::vector<Int> factorize(const Int& m);
// Number of distinct prime factors of |m|; omega(1) = 0.
int omega(const Int& m);
// Product of the distinct prime factors of |m|; rad(1) = 1.
Int rad(const Int& m);
// True when no prime square divides m.  is_squarefree(0) is false and
// is_squarefree(1) is true; the sign is ignored.
bool is_squarefree(const Int& m);
// Deterministic primality for 0 <= m <= 10^18.
bool is_prime(const Int& m);

// omega(m) < 2 log m, and for m > 2 also omega(m) < 3 log m / log log m,
// both decided with certified logarithms.  Requires m >= 2.
bool omega_bound_check(const Int& m);

// Number of x in [0, m) with f(x) = 0 mod m, by direct evaluation.
Int rho_bruteforce(const QuadPoly& f, const Int& m);

// Same count modulo p^2 through the case analysis on the discriminant: for
// odd p not dividing A a Legendre-symbol split with Hensel lifting, for p
// dividing A the linear-reduction cases with one level of recursion when p
// divides all of A, B, C, and direct evaluation for p = 2.
Int rho_quadratic_prime_sq(const QuadPoly& f, const Int& p);

// Certified bracket around the number of x < n <= y with f(n) square-free.
struct SieveBracket {
  CertifiedReal lower;
  CertifiedReal upper;
  Int empirical;
  long x, y, z;
};

// Exact count of n in (x, y] with f(n) square-free.
Int count_squarefree_values(const QuadPoly& f, long x, long y);

// Sifted lower and upper bounds for the same count, with the empirical value:
//   lower = (y-x) * prod_{p<=z, p | delta} (1 - 1/p)
//                 * prod_{p<=z, p | gcd(A,B,C)} (1 - rho(p^2)/p^2)
//                 * prod_p (1 - 2/p^2)
//           - rad(delta) 3^pi(z)
//           - (y-x) (sum_{z<p<=F, p | gcd} rho(p^2)/p^2 + omega(delta)/z + 4/z)
//           - (sum_{z<p<=F, p | gcd} rho(p^2) + sum_{z<p<=F, p∤gcd, p | delta} p
//              + 2 (pi(F) - pi(z)))
//   upper = (y-x) * (first two products) + rad(delta) 3^pi(z)
// where F = max_{x<n<=y} |f(n)|^{1/2}.  The infinite product is enclosed by a
// truncation at 10^4 with a tail factor in [1 - 4/10^4, 1].  Requires
// delta > 0 (so the values are eventually nonzero), x < y and 2 <= z < y.
SieveBracket squarefree_sieve_bounds(const QuadPoly& f, long x, long y, long z);

// Members of the strict positive-root cubic census with trace a whose
// discriminant is square-free, and the ratio count / a^5.  When 3 | a, pairs
// with 3 | B are skipped outright: the discriminant is then 27 times an
// integer quadratic, never square-free.
struct SquarefreeCensus {
  Int count;
  CertifiedReal ratio;
};
SquarefreeCensus count_P3_squarefree_plus(const Int& a);

// Count of C in [-H, H] such that disc(X^3 - AX^2 + BX - C) has at most k
// distinct prime factors; zero discriminants are excluded.  hypothesis_ok
// records whether A^2 - 3B is a non-square (the regime where the count is
// expected to grow); the count is returned either way.  Requires H >= 2.
struct AlmostPrimeCount {
  Int count;
  bool hypothesis_ok;
};
AlmostPrimeCount count_almost_prime_disc(const Int& a, const Int& b, long h, int k = 2);

// Same count over all triples (A, B, C) in [-H, H]^3.
Int count_almost_prime_disc_box(long h, int k = 2);

// Pairs (A, B) in [-H, H]^2 with A^2 - 3B a perfect square, counted per trace
// by scanning Z with A^2 = Z^2 mod 3 and |A^2 - Z^2| <= 3H.  Requires H >= 2.
Int count_square_pairs(long h);
// The same by testing all (2H+1)^2 pairs directly.
Int count_square_pairs_naive(long h);

// Exact sum of Euler's totient over 1 <= n <= N with n = r mod 3, r in {0, 1}.
Int phi_sum_mod3(long n, int r);

// Certified enclosure of prod_p (1 - 2/p^2) over all primes: the finite
// product over p <= truncation times a tail factor in [1 - 4/truncation, 1].
CertifiedReal feller_tornier(long truncation);

}  // namespace rootcensus

#endif
