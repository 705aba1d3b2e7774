#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/disc_arith.hpp"
#include "rootcensus/interval.hpp"
#include "rootcensus/numeric.hpp"
#include "rootcensus/polynomial.hpp"
#include "rootcensus/robinson.hpp"

using namespace rootcensus;

namespace {

Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// trial-division reference, adequate for |m| up to ~10^12
std::vector<Int> slow_factor(const Int& m) {
  Int v = abs(m);
  std::vector<Int> out;
  for (Int d(2); d * d <= v; ++d) {
    while (v % d == 0) {
      out.push_back(d);
      v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

int slow_omega(const Int& m) {
  auto f = slow_factor(m);
  int k = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i == 0 || f[i] != f[i - 1]) ++k;
  return k;
}

bool slow_squarefree(const Int& m) {
  if (sgn(m) == 0) return false;
  auto f = slow_factor(m);
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return false;
  return true;
}

Int product_of(const std::vector<Int>& fs) {
  Int p(1);
  for (const Int& f : fs) p *= f;
  return p;
}

long slow_totient(long m) {
  long c = 0;
  for (long j = 1; j <= m; ++j)
    if (std::gcd(j, m) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("factor toolkit on small and large integers") {
  CHECK(factorize(49) == std::vector<Int>{7, 7});
  CHECK(factorize(-27) == std::vector<Int>{3, 3, 3});
  CHECK(factorize(5) == std::vector<Int>{5});
  CHECK(factorize(1).empty());
  CHECK(factorize(-1).empty());
  CHECK(factorize(360) == std::vector<Int>({2, 2, 2, 3, 3, 5}));
  CHECK(factorize(30030) == std::vector<Int>({2, 3, 5, 7, 11, 13}));

  CHECK_THROWS_AS(factorize(0), std::domain_error);
  CHECK_THROWS_AS(factorize(pow_int(Int(10), 18) + 1), std::domain_error);

  // 10^18 sits exactly on the supported ceiling
  auto big = factorize(pow_int(Int(10), 18));
  CHECK(big.size() == 36);
  CHECK(product_of(big) == pow_int(Int(10), 18));

  // large prime, semiprime, prime square: these exercise the Miller-Rabin
  // and Brent stages, not the trial-division table
  Int p9(999999937), q9(1000000007);
  Int bigprime("999999999999999989");
  CHECK(factorize(bigprime) == std::vector<Int>{bigprime});
  CHECK(factorize(p9 * q9) == std::vector<Int>({p9, q9}));
  CHECK(factorize(p9 * p9) == std::vector<Int>({p9, p9}));
  CHECK(factorize(pow_int(Int(2), 59)) == std::vector<Int>(59, Int(2)));
  Int primorial15("614889782588491410");  // product of the primes up to 47
  CHECK(factorize(primorial15).size() == 15);
  CHECK(product_of(factorize(primorial15)) == primorial15);

  CHECK(omega(1) == 0);
  CHECK(omega(49) == 1);
  CHECK(omega(-27) == 1);
  CHECK(omega(30030) == 6);
  CHECK(omega(223092870) == 9);
  CHECK(omega(primorial15) == 15);

  CHECK(rad(49) == 7);
  CHECK(rad(-27) == 3);
  CHECK(rad(360) == 30);
  CHECK(rad(1) == 1);
  CHECK(rad(p9 * p9) == p9);

  CHECK_FALSE(is_squarefree(0));
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(5));
  CHECK_FALSE(is_squarefree(49));
  CHECK_FALSE(is_squarefree(-27));
  CHECK_FALSE(is_squarefree(-4));
  CHECK(is_squarefree(30030));
  CHECK(is_squarefree(p9 * q9));
  CHECK_FALSE(is_squarefree(p9 * p9));

  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(561));  // Carmichael number, 3 * 11 * 17
  CHECK(is_prime(bigprime));
  CHECK_FALSE(is_prime(pow_int(Int(10), 18)));
  CHECK_THROWS_AS(is_prime(-7), std::domain_error);
  CHECK_THROWS_AS(is_prime(pow_int(Int(10), 18) + 1), std::domain_error);

  for (long m = 2; m <= 3000; ++m) {
    CHECK(factorize(m) == slow_factor(m));
    CHECK(omega(m) == slow_omega(m));
    CHECK(is_squarefree(m) == slow_squarefree(m));
  }

  std::mt19937_64 rng(70101);
  std::uniform_int_distribution<long> dist(2, 1000000000000L);
  for (int t = 0; t < 200; ++t) {
    Int m(dist(rng));
    auto fs = factorize(m);
    CHECK(product_of(fs) == m);
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) CHECK(fs[i] <= fs[i + 1]);
    for (const Int& f : fs) CHECK(is_prime(f));
  }
}

TEST_CASE("prime factor count growth bounds") {
  for (long m = 2; m <= 20000; ++m) CHECK(omega_bound_check(m));
  CHECK(omega_bound_check(30030));
  CHECK(omega_bound_check(223092870));
  CHECK(omega_bound_check(Int("614889782588491410")));
  CHECK(omega_bound_check(Int("999999999999999989")));
  CHECK_THROWS_AS(omega_bound_check(1), std::domain_error);
  CHECK_THROWS_AS(omega_bound_check(0), std::domain_error);
}

TEST_CASE("quadratic root counts modulo prime squares") {
  CHECK(rho_bruteforce(QuadPoly(1, 1, 1), 25) == 0);
  CHECK(rho_bruteforce(QuadPoly(1, 0, -1), 9) == 2);
  CHECK(rho_bruteforce(QuadPoly(3, 1, 1), 9) == 1);
  CHECK(rho_bruteforce(QuadPoly(1, 1, 1), 9) == 0);
  CHECK(rho_bruteforce(QuadPoly(1, 0, 0), 9) == 3);
  CHECK(rho_bruteforce(QuadPoly(2, 2, 0), 4) == 4);
  CHECK(rho_bruteforce(QuadPoly(1, 1, 1), 1) == 1);
  CHECK_THROWS_AS(rho_bruteforce(QuadPoly(1, 1, 1), 0), std::domain_error);

  CHECK(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), 5) == 0);
  CHECK(rho_quadratic_prime_sq(QuadPoly(1, 0, -1), 3) == 2);
  CHECK(rho_quadratic_prime_sq(QuadPoly(3, 1, 1), 3) == 1);
  CHECK(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), 3) == 0);
  CHECK(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), 2) == 0);
  CHECK(rho_quadratic_prime_sq(QuadPoly(1, 0, -1), 2) == 2);

  // double root: every residue lifting the root survives
  for (long p : {3L, 5L, 7L}) {
    CHECK(rho_quadratic_prime_sq(QuadPoly(1, 2, 1), p) == p);
    CHECK(rho_bruteforce(QuadPoly(1, 2, 1), p * p) == p);
  }

  // degenerate leading coefficients
  CHECK(rho_quadratic_prime_sq(QuadPoly(0, 1, 0), 5) == 1);
  CHECK(rho_quadratic_prime_sq(QuadPoly(0, 0, 9), 3) == 9);
  CHECK(rho_quadratic_prime_sq(QuadPoly(0, 0, 3), 3) == 0);

  CHECK_THROWS_AS(rho_quadratic_prime_sq(QuadPoly(0, 0, 0), 3), std::domain_error);
  CHECK_THROWS_AS(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), 4), std::domain_error);
  CHECK_THROWS_AS(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), 1), std::domain_error);
  CHECK_THROWS_AS(rho_quadratic_prime_sq(QuadPoly(1, 1, 1), -3), std::domain_error);

  const long small_primes[] = {2, 3, 5, 7, 11, 13};
  const long all_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

  std::mt19937 rng(81533);
  std::uniform_int_distribution<long> coeff(-50, 50);
  for (int t = 0; t < 500; ++t) {
    QuadPoly f(coeff(rng), coeff(rng), coeff(rng));
    if (t < 100) {
      for (long p : all_primes)
        CHECK(rho_quadratic_prime_sq(f, p) == rho_bruteforce(f, Int(p) * p));
    } else {
      for (long p : small_primes)
        CHECK(rho_quadratic_prime_sq(f, p) == rho_bruteforce(f, Int(p) * p));
    }
  }

  // force the stratified branches: p dividing the lead, p dividing everything
  std::uniform_int_distribution<long> small(-20, 20);
  std::uniform_int_distribution<long> tiny(1, 5);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (int t = 0; t < 10; ++t) {
      QuadPoly f(p * tiny(rng), small(rng), small(rng));
      CHECK(rho_quadratic_prime_sq(f, p) == rho_bruteforce(f, Int(p) * p));
    }
    for (int t = 0; t < 5; ++t) {
      QuadPoly f(p * tiny(rng), p * small(rng), p * small(rng));
      CHECK(rho_quadratic_prime_sq(f, p) == rho_bruteforce(f, Int(p) * p));
    }
  }
}

TEST_CASE("root counts multiply across coprime moduli") {
  const std::pair<long, long> pairs[] = {{3, 5}, {3, 7}, {3, 11}, {5, 7}};
  std::mt19937 rng(90210);
  std::uniform_int_distribution<long> coeff(-30, 30);
  for (auto [p, q] : pairs) {
    long d = p * q;
    int done = 0;
    while (done < 25) {
      QuadPoly f(coeff(rng), coeff(rng), coeff(rng));
      if (gcd(f.A, Int(d)) != 1 || sgn(f.delta) == 0) continue;
      ++done;
      Int via_primes = rho_quadratic_prime_sq(f, p) * rho_quadratic_prime_sq(f, q);
      Int direct = rho_bruteforce(f, Int(d) * d);
      CHECK(direct == via_primes);
      // with the discriminant nonzero the count stays under 2^omega(d) rad(delta)
      CHECK(direct <= pow_int(Int(2), 2) * rad(f.delta));
    }
  }

  // vanishing discriminant: the count can reach d but not exceed it
  CHECK(rho_bruteforce(QuadPoly(1, 2, 1), 225) == 15);
}

TEST_CASE("square-free quadratic value counts") {
  CHECK(count_squarefree_values(QuadPoly(1, 0, 1), 0, 100) == 88);
  CHECK(count_squarefree_values(QuadPoly(1, 0, 0), 0, 100) == 1);

  // a vanishing value is not square-free: here f(2) = 0
  CHECK(count_squarefree_values(QuadPoly(1, 0, -4), 1, 3) == 1);

  QuadPoly g(1, 1, -2);
  CHECK(count_squarefree_values(g, 0, 37) + count_squarefree_values(g, 37, 100) ==
        count_squarefree_values(g, 0, 100));
  std::mt19937 rng(3311);
  std::uniform_int_distribution<long> cut(1, 499);
  QuadPoly h(1, 0, 1);
  Int whole = count_squarefree_values(h, 0, 500);
  for (int t = 0; t < 10; ++t) {
    long m = cut(rng);
    CHECK(count_squarefree_values(h, 0, m) + count_squarefree_values(h, m, 500) == whole);
  }

  CHECK_THROWS_AS(count_squarefree_values(QuadPoly(1, 0, 1), 5, 5), std::domain_error);
  CHECK_THROWS_AS(count_squarefree_values(QuadPoly(1, 0, 1), 9, 2), std::domain_error);
}

TEST_CASE("square-free sieve brackets") {
  struct Sample {
    long a, b, c;
    long emp;
  };
  // discriminants here are powerful numbers with a doubled root at each small
  // prime divisor, so both sides of the bracket are reliable
  const Sample samples[] = {
      {1, 0, -1, 3229},  {1, 0, -4, 3233},  {1, 0, -9, 2774}, {1, 0, -16, 3233},
      {1, 0, -25, 2809}, {1, 1, -2, 2769},  {1, 2, -3, 3232}, {1, 1, -6, 2817},
      {1, 3, -4, 2817},  {1, 5, -6, 2884},
  };
  for (const Sample& s : samples) {
    QuadPoly f(s.a, s.b, s.c);
    CHECK(f.delta > 0);
    for (long z : {7L, 11L, 13L}) {
      SieveBracket br = squarefree_sieve_bounds(f, 0, 10000, z);
      CHECK(br.x == 0);
      CHECK(br.y == 10000);
      CHECK(br.z == z);
      CHECK(br.empirical == s.emp);
      CHECK(br.empirical <= 10000);
      CHECK(br.lower.certainly_le(Rat(s.emp)));
      REQUIRE(br.upper.is_exact());
      CHECK(br.upper.certainly_ge(Rat(s.emp)));
    }
  }

  // shared content across all coefficients: the gcd stratum is exercised
  SieveBracket shared = squarefree_sieve_bounds(QuadPoly(2, 0, -2), 0, 10000, 13);
  CHECK(shared.empirical == 3229);
  CHECK(shared.lower.certainly_le(Rat(3229)));
  CHECK(shared.upper.certainly_le(Rat(3958)));
  CHECK(shared.upper.certainly_ge(Rat(3958)));
  CHECK(shared.upper.certainly_ge(Rat(3229)));

  // the reported empirical count is the plain count over the same range
  for (const Sample& s : {samples[0], samples[5]}) {
    QuadPoly f(s.a, s.b, s.c);
    CHECK(squarefree_sieve_bounds(f, 0, 10000, 11).empirical ==
          count_squarefree_values(f, 0, 10000));
  }

  CHECK_THROWS_AS(squarefree_sieve_bounds(QuadPoly(1, 0, 1), 0, 100, 7),
                  std::domain_error);  // negative discriminant
  CHECK_THROWS_AS(squarefree_sieve_bounds(QuadPoly(1, 0, 0), 0, 100, 7),
                  std::domain_error);  // zero discriminant
  CHECK_THROWS_AS(squarefree_sieve_bounds(QuadPoly(1, 0, -2), 100, 100, 7),
                  std::domain_error);
  CHECK_THROWS_AS(squarefree_sieve_bounds(QuadPoly(1, 0, -2), 0, 100, 1),
                  std::domain_error);
  CHECK_THROWS_AS(squarefree_sieve_bounds(QuadPoly(1, 0, -2), 0, 5, 7),
                  std::domain_error);
}

TEST_CASE("sieve upper estimate overshoot cases") {
  // The upper estimate replaces the local factor at each prime p <= z dividing
  // the discriminant by (1 - 1/p).  That substitution is only an upper bound
  // when the true local density at p is at least 1/p, that is rho(p^2) >= p.
  // When rho(p^2) < p the replaced factor undercuts the main term and the
  // estimate can fall below the empirical count.  These cases pin that down;
  // the lower estimate stays valid throughout.

  // x^2 - 2: rho(4) = 0, so the (1 - 1/2) factor is not justified
  {
    QuadPoly f(1, 0, -2);
    const std::pair<long, long> zu[] = {{7, 5162}, {11, 5486}, {13, 6458}};
    for (auto [z, u] : zu) {
      SieveBracket br = squarefree_sieve_bounds(f, 0, 10000, z);
      CHECK(br.empirical == 9419);
      REQUIRE(br.upper.is_exact());
      CHECK(br.upper.certainly_le(Rat(u)));
      CHECK(br.upper.certainly_ge(Rat(u)));
      CHECK(br.upper.certainly_le(Rat(br.empirical)));  // bound sits below the count
      CHECK(br.lower.certainly_le(Rat(br.empirical)));
    }
  }

  // x^2 + x - 1: discriminant 5 with rho(25) = 0, same failure at z = 7
  {
    SieveBracket br = squarefree_sieve_bounds(QuadPoly(1, 1, -1), 0, 10000, 7);
    CHECK(br.empirical == 9688);
    CHECK(br.upper.certainly_le(Rat(8405)));
    CHECK(br.upper.certainly_ge(Rat(8405)));
    CHECK(br.lower.certainly_le(Rat(9688)));
  }

  // 2x^2 - 2: a prime dividing the content lands in both products, so its
  // factor is applied twice; at z = 7 the slack term no longer covers that
  {
    SieveBracket br = squarefree_sieve_bounds(QuadPoly(2, 0, -2), 0, 10000, 7);
    CHECK(br.empirical == 3229);
    CHECK(br.upper.certainly_le(Rat(2662)));
    CHECK(br.upper.certainly_ge(Rat(2662)));
    CHECK(br.lower.certainly_le(Rat(3229)));
  }

  // 3x^2 + 3x - 3, content 3: same double application at z = 7
  {
    SieveBracket br = squarefree_sieve_bounds(QuadPoly(3, 3, -3), 0, 10000, 7);
    CHECK(br.empirical == 9688);
    CHECK(br.upper.certainly_le(frac(19645, 3)));
    CHECK(br.upper.certainly_ge(frac(19645, 3)));
    CHECK(br.lower.certainly_le(Rat(9688)));
  }
}

TEST_CASE("positive cubic square-free discriminant census") {
  CHECK(count_P3_squarefree_plus(3).count == 0);
  CHECK(count_P3_squarefree_plus(6).count == 5);
  CHECK(count_P3_squarefree_plus(8).count == 23);
  CHECK(count_P3_squarefree_plus(12).count == 140);
  CHECK(count_P3_squarefree_plus(20).count == 2471);

  SquarefreeCensus six = count_P3_squarefree_plus(6);
  REQUIRE(six.ratio.is_exact());
  CHECK(six.ratio.certainly_le(frac(5, 7776)));
  CHECK(six.ratio.certainly_ge(frac(5, 7776)));

  // independent census through the interlacing enumeration, which does not
  // know about the mod-3 shortcut
  for (int a = 1; a <= 12; ++a) {
    Int oracle(0);
    for (const MonicIntPoly& m : enumerate_positive_real_monic(3, a, true)) {
      Int d = discriminant(m.to_poly());
      if (is_squarefree(d)) ++oracle;
    }
    CHECK(count_P3_squarefree_plus(a).count == oracle);
  }

  // growth direction at larger traces: count * 10^5 >= 3 a^5
  CHECK(count_P3_squarefree_plus(30).count == 14140);
  CHECK(count_P3_squarefree_plus(40).count == 79698);
  for (long a : {20L, 30L, 40L}) {
    Int c = count_P3_squarefree_plus(a).count;
    CHECK(c * 100000 >= 3 * pow_int(Int(a), 5));
  }

  CHECK_THROWS_AS(count_P3_squarefree_plus(0), std::domain_error);
}

TEST_CASE("almost-prime discriminant counts") {
  AlmostPrimeCount base = count_almost_prime_disc(0, -1, 10);
  CHECK(base.count == 21);
  CHECK(base.hypothesis_ok);

  // A^2 - 3B = 1 is a square, so the flag drops but the count still comes back
  AlmostPrimeCount flagged = count_almost_prime_disc(2, 1, 10);
  CHECK(flagged.count == 11);
  CHECK_FALSE(flagged.hypothesis_ok);

  // direct recount for one window
  {
    Int expect(0);
    for (long c = -15; c <= 15; ++c) {
      Int d = cubic_discriminant(1, -2, c);
      if (sgn(d) == 0) continue;
      if (omega(d) <= 2) ++expect;
    }
    AlmostPrimeCount got = count_almost_prime_disc(1, -2, 15);
    CHECK(got.count == expect);
    CHECK(got.hypothesis_ok);  // 1 + 6 = 7 is not a square
  }

  CHECK(count_almost_prime_disc(0, -1, 10, 1).count <= 21);

  CHECK(count_almost_prime_disc_box(10) == 6058);
  CHECK(count_almost_prime_disc_box(10, 1) == 1370);
  CHECK(count_almost_prime_disc_box(20) == 34854);
  CHECK(count_almost_prime_disc_box(40) == 212008);
  CHECK(count_almost_prime_disc_box(20) >= 4 * count_almost_prime_disc_box(10));
  CHECK(count_almost_prime_disc_box(40) >= 4 * count_almost_prime_disc_box(20));

  // recount the whole box at a tiny size
  {
    Int expect(0);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c) {
          Int d = cubic_discriminant(a, b, c);
          if (sgn(d) == 0) continue;
          if (omega(d) <= 2) ++expect;
        }
    CHECK(count_almost_prime_disc_box(3) == expect);
  }

  CHECK_THROWS_AS(count_almost_prime_disc(0, -1, 1), std::domain_error);
  CHECK_THROWS_AS(count_almost_prime_disc_box(1), std::domain_error);
  CHECK_THROWS_AS(count_almost_prime_disc_box(20001), std::domain_error);
}

TEST_CASE("square trace-pair counts") {
  for (long h : {2L, 5L, 10L, 25L, 50L, 100L, 200L})
    CHECK(count_square_pairs(h) == count_square_pairs_naive(h));

  CHECK(count_square_pairs(2) == 9);
  CHECK(count_square_pairs(10) == 62);
  CHECK(count_square_pairs(50) == 433);
  CHECK(count_square_pairs(100) == 982);
  CHECK(count_square_pairs(200) == 2177);

  // the count tracks H log H: ratio stays within [1/2, 3] over three decades
  for (long h : {1000L, 10000L, 100000L}) {
    Int c = count_square_pairs(h);
    Interval hlogh = Interval::from_long(h, 128) * log(Interval::from_long(h, 128));
    Interval c_iv = Interval::from_rat(Rat(c), 128);
    CHECK((hlogh * Interval::from_rat(frac(1, 2), 128)).certainly_le(c_iv));
    CHECK(c_iv.certainly_le(hlogh * Interval::from_rat(Rat(3), 128)));
  }

  CHECK_THROWS_AS(count_square_pairs(1), std::domain_error);
  CHECK_THROWS_AS(count_square_pairs_naive(1), std::domain_error);
}

TEST_CASE("totient sums in residue classes") {
  CHECK(phi_sum_mod3(10, 0) == 10);
  CHECK(phi_sum_mod3(10, 1) == 13);
  CHECK(phi_sum_mod3(200, 0) == 2996);
  CHECK(phi_sum_mod3(200, 1) == 4615);
  CHECK(phi_sum_mod3(1000, 0) == 76178);
  CHECK(phi_sum_mod3(1000, 1) == 114181);

  for (int r : {0, 1}) {
    Int expect(0);
    for (long m = 1; m <= 200; ++m)
      if (m % 3 == r) expect += slow_totient(m);
    CHECK(phi_sum_mod3(200, r) == expect);
  }

  // the sums at 10^6 sit within 2% of their quadratic main terms
  Int big0 = phi_sum_mod3(1000000, 0);
  Int big1 = phi_sum_mod3(1000000, 1);
  CHECK(big0 == Int("75990988594"));
  CHECK(big1 == Int("113986521147"));
  const int prec = 256;
  Int n2 = pow_int(Int(1000000), 2);
  Interval pisq = Interval::pi(prec) * Interval::pi(prec);
  Interval tol = Interval::from_rat(frac(1, 50), prec);
  {
    Interval main = Interval::from_rat(frac(3 * n2, Int(4)), prec) / pisq;
    Interval diff = Interval::from_rat(Rat(big0), prec) - main;
    CHECK(imax(diff, neg(diff)).certainly_le(main * tol));
  }
  {
    Interval main = Interval::from_rat(frac(9 * n2, Int(8)), prec) / pisq;
    Interval diff = Interval::from_rat(Rat(big1), prec) - main;
    CHECK(imax(diff, neg(diff)).certainly_le(main * tol));
  }

  CHECK_THROWS_AS(phi_sum_mod3(10, 2), std::domain_error);
  CHECK_THROWS_AS(phi_sum_mod3(0, 0), std::domain_error);
  CHECK_THROWS_AS(phi_sum_mod3(100000001, 0), std::domain_error);
}

TEST_CASE("two-per-prime-square density product") {
  CertifiedReal ft = feller_tornier(10000);
  CHECK_FALSE(ft.is_exact());
  CHECK(ft.certainly_ge(frac(32, 100)));
  CHECK(ft.certainly_le(frac(33, 100)));
  // the limit to ten digits lands inside the certified bracket
  Rat limit = frac(3226340989L, 10000000000L);
  CHECK(ft.iv.contains(limit));

  CertifiedReal coarse = feller_tornier(100);
  CHECK(coarse.iv.contains(limit));
  // the longer product gives the sharper floor
  CHECK(ft.certainly_ge(frac(3225, 10000)));
  CHECK_FALSE(coarse.certainly_ge(frac(3225, 10000)));

  CHECK_THROWS_AS(feller_tornier(1), std::domain_error);
  CHECK_THROWS_AS(feller_tornier(-5), std::domain_error);
}

TEST_CASE("quadratic wrapper invariants") {
  CHECK(QuadPoly(3, 3, -3).delta == 45);
  CHECK(QuadPoly(1, 0, -2).delta == 8);
  CHECK(QuadPoly(2, 3, -7).eval(5) == 58);
  CHECK(QuadPoly(2, 3, -7).eval(-2) == -5);
  std::mt19937 rng(917);
  std::uniform_int_distribution<long> coeff(-100, 100);
  for (int t = 0; t < 50; ++t) {
    QuadPoly f(coeff(rng), coeff(rng), coeff(rng));
    CHECK(f.delta == f.B * f.B - 4 * f.A * f.C);
    Int x(coeff(rng));
    CHECK(f.eval(x) == f.A * x * x + f.B * x + f.C);
  }
}
