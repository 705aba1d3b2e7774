#include "rootcensus/disc_arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/polynomial.hpp"

namespace rootcensus {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr long kFactorCeiling = 1000000000000000000L;  // 10^18
constexpr long kTableLimit = 1000000;
constexpr long kSieveLimit = 100000000;

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

std::vector<long> sieve_upto(long n) {
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  std::vector<long> out;
  for (long i = 2; i <= n; i++) {
    if (comp[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    if (i <= n / i)
      for (long j = i * i; j <= n; j += i) comp[static_cast<size_t>(j)] = true;
  }
  return out;
}

const std::vector<long>& prime_table() {
  static const std::vector<long> table = sieve_upto(kTableLimit);
  return table;
}

long pi_leq(long x) {
  if (x < 2) return 0;
  if (x <= kTableLimit) {
    const auto& t = prime_table();
    return std::upper_bound(t.begin(), t.end(), x) - t.begin();
  }
  if (x > kSieveLimit) throw std::domain_error("pi_leq: range too large");
  std::vector<bool> comp(static_cast<size_t>(x) + 1, false);
  long cnt = 0;
  for (long i = 2; i <= x; i++) {
    if (comp[static_cast<size_t>(i)]) continue;
    cnt++;
    if (i <= x / i)
      for (long j = i * i; j <= x; j += i) comp[static_cast<size_t>(j)] = true;
  }
  return cnt;
}

std::vector<long> primes_upto(long x) {
  if (x < 2) return {};
  if (x <= kTableLimit) {
    const auto& t = prime_table();
    return std::vector<long>(t.begin(), std::upper_bound(t.begin(), t.end(), x));
  }
  if (x > kSieveLimit) throw std::domain_error("primes_upto: range too large");
  return sieve_upto(x);
}

u64 mulmod_u64(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod_u64(u64 a, u64 e, u64 n) {
  u64 r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

// Deterministic over the whole 64-bit range with the first twelve prime bases.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : std::initializer_list<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    s++;
  }
  for (u64 a : std::initializer_list<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; i++) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 isqrt_u64(u64 v) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && u128(r) * r > v) r--;
  while (u128(r + 1) * (r + 1) <= v) r++;
  return r;
}

// Brent's cycle variant of the rho method; n odd composite.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; c++) {
    auto step = [&](u64 x) { return (mulmod_u64(x, x, n) + c) % n; };
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; i++) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        u64 lim = std::min<u64>(128, r - k);
        for (u64 i = 0; i < lim; i++) {
          y = step(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      u64 yy = ys;
      while (g == 1) {
        yy = step(yy);
        g = std::gcd(x > yy ? x - yy : yy - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 v, std::vector<u64>& out) {
  for (long p : prime_table()) {
    u64 up = static_cast<u64>(p);
    if (u128(up) * up > v) break;
    while (v % up == 0) {
      out.push_back(up);
      v /= up;
    }
  }
  if (v == 1) return;
  if (is_prime_u64(v)) {
    out.push_back(v);
    return;
  }
  // at most two prime factors remain, all beyond the table
  u64 r = isqrt_u64(v);
  if (r * r == v) {
    out.push_back(r);
    out.push_back(r);
    return;
  }
  u64 d = pollard_brent(v);
  factor_u64(d, out);
  factor_u64(v / d, out);
}

// Distinct prime factors of v, with an early exit once clamp is exceeded.
int omega_clamped_u64(u64 v, int clamp) {
  int cnt = 0;
  for (long p : prime_table()) {
    u64 up = static_cast<u64>(p);
    if (u128(up) * up * up > v) break;
    if (v % up == 0) {
      cnt++;
      if (cnt > clamp) return cnt;
      do {
        v /= up;
      } while (v % up == 0);
    }
  }
  if (v > 1) {
    u64 r = isqrt_u64(v);
    if (r * r == v)
      cnt += 1;
    else if (is_prime_u64(v))
      cnt += 1;
    else
      cnt += 2;
  }
  return cnt;
}

bool is_squarefree_u64(u64 v) {
  for (long p : prime_table()) {
    u64 up = static_cast<u64>(p);
    if (u128(up) * up * up > v) break;
    if (v % up == 0) {
      v /= up;
      if (v % up == 0) return false;
    }
  }
  if (v == 1) return true;
  u64 r = isqrt_u64(v);
  return r * r != v;
}

u64 checked_u64(const Int& m, const char* who) {
  Int v = abs(m);
  if (v > kFactorCeiling) throw std::domain_error(std::string(who) + ": |m| exceeds 10^18");
  return v.get_ui();
}

bool divides(long d, const Int& v) { return mpz_divisible_ui_p(v.get_mpz_t(), d) != 0; }
bool divides(const Int& d, const Int& v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::optional<bool> certainly_less(const Interval& a, const Interval& b) {
  if (a.certainly_lt(b)) return true;
  if (b.certainly_le(a)) return false;
  return std::nullopt;
}

}  // namespace

std::vector<Int> factorize(const Int& m) {
  if (sgn(m) == 0) throw std::domain_error("factorize: zero has no factorization");
  u64 v = checked_u64(m, "factorize");
  std::vector<u64> fs;
  factor_u64(v, fs);
  std::sort(fs.begin(), fs.end());
  std::vector<Int> out;
  out.reserve(fs.size());
  for (u64 p : fs) out.emplace_back(static_cast<unsigned long>(p));
  return out;
}

int omega(const Int& m) {
  std::vector<Int> fs = factorize(m);
  int cnt = 0;
  for (size_t i = 0; i < fs.size(); i++)
    if (i == 0 || fs[i] != fs[i - 1]) cnt++;
  return cnt;
}

Int rad(const Int& m) {
  std::vector<Int> fs = factorize(m);
  Int r(1);
  for (size_t i = 0; i < fs.size(); i++)
    if (i == 0 || fs[i] != fs[i - 1]) r *= fs[i];
  return r;
}

bool is_squarefree(const Int& m) {
  if (sgn(m) == 0) return false;
  return is_squarefree_u64(checked_u64(m, "is_squarefree"));
}

bool is_prime(const Int& m) {
  if (sgn(m) < 0) throw std::domain_error("is_prime: negative argument");
  return is_prime_u64(checked_u64(m, "is_prime"));
}

bool omega_bound_check(const Int& m) {
  if (m < 2) throw std::domain_error("omega_bound_check: m must be >= 2");
  int w = omega(m);
  for (mpfr_prec_t prec = 128; prec <= (1 << 12); prec *= 2) {
    Interval lm = log(Interval::from_int(m, prec));
    Interval wv = Interval::from_long(w, prec);
    std::optional<bool> first = certainly_less(wv, Interval::from_long(2, prec) * lm);
    if (!first) continue;
    if (!*first) return false;
    if (m == 2) return true;
    std::optional<bool> second =
        certainly_less(wv, Interval::from_long(3, prec) * lm / log(lm));
    if (!second) continue;
    return *second;
  }
  throw std::runtime_error("omega_bound_check: bounds not resolved");
}

Int rho_bruteforce(const QuadPoly& f, const Int& m) {
  if (m < 1) throw std::domain_error("rho_bruteforce: modulus must be >= 1");
  Int count(0);
  for (Int x(0); x < m; ++x)
    if (divides(m, f.eval(x))) count += 1;
  return count;
}

Int rho_quadratic_prime_sq(const QuadPoly& f, const Int& p) {
  if (sgn(f.A) == 0 && sgn(f.B) == 0 && sgn(f.C) == 0)
    throw std::domain_error("rho_quadratic_prime_sq: zero polynomial");
  if (!is_prime(p)) throw std::domain_error("rho_quadratic_prime_sq: p must be prime");
  if (p == 2) return rho_bruteforce(f, Int(4));
  if (!divides(p, f.A)) {
    if (divides(p, f.delta)) return divides(p * p, f.delta) ? p : Int(0);
    return mpz_legendre(f.delta.get_mpz_t(), p.get_mpz_t()) == 1 ? Int(2) : Int(0);
  }
  if (divides(p, f.B) && divides(p, f.C)) {
    QuadPoly g(f.A / p, f.B / p, f.C / p);
    return p * rho_bruteforce(g, p);
  }
  // p | A with p | delta forces p | B and p coprime to C, so there is no root
  // even modulo p; p coprime to delta leaves a simple linear root to lift
  return divides(p, f.delta) ? Int(0) : Int(1);
}

Int count_squarefree_values(const QuadPoly& f, long x, long y) {
  if (x >= y) throw std::domain_error("count_squarefree_values: need x < y");
  Int cnt(0);
  for (long n = x + 1; n <= y; n++)
    if (is_squarefree(f.eval(Int(n)))) cnt += 1;
  return cnt;
}

SieveBracket squarefree_sieve_bounds(const QuadPoly& f, long x, long y, long z) {
  if (sgn(f.delta) <= 0)
    throw std::domain_error("squarefree_sieve_bounds: discriminant must be positive");
  if (x >= y || z >= y || z < 2)
    throw std::domain_error("squarefree_sieve_bounds: need x < y and 2 <= z < y");

  Int g = gcd(gcd(f.A, f.B), f.C);

  // F^2 = max |f(n)| over the integer range; |f| peaks at an endpoint or next
  // to the vertex
  std::vector<long> candidates = {x + 1, y};
  if (sgn(f.A) != 0) {
    Int v0 = rat_floor(frac(-f.B, 2 * f.A));
    for (Int n : {v0, Int(v0 + 1)}) {
      if (n >= x + 1 && n <= y && fits_long(n)) candidates.push_back(n.get_si());
    }
  }
  Int fsq(0);
  for (long n : candidates) fsq = std::max(fsq, Int(abs(f.eval(Int(n)))));
  Int ff = isqrt(fsq);
  if (!fits_long(ff)) throw std::domain_error("squarefree_sieve_bounds: range too large");
  long f_floor = ff.get_si();

  long pi_z = pi_leq(z);
  long pi_f = pi_leq(f_floor);

  Rat prod_delta(1), prod_gcd(1);
  for (long p : primes_upto(z)) {
    if (divides(p, f.delta)) prod_delta *= frac(p - 1, p);
    if (divides(p, g)) {
      Int rp = rho_quadratic_prime_sq(f, Int(p));
      prod_gcd *= frac(Int(p) * p - rp, Int(p) * p);
    }
  }

  Int rad_delta = rad(f.delta);
  Rat blob = Rat(rad_delta * pow_int(Int(3), static_cast<unsigned long>(pi_z)));
  Rat upper_rat = Rat(y - x) * prod_delta * prod_gcd + blob;

  // strata over z < p <= F: prime divisors of gcd(A,B,C) and of delta
  Rat sum_rho_p2(0), sum_rho(0);
  std::vector<Int> gcd_primes;
  if (g > 1) {
    for (const Int& q : factorize(g))
      if (gcd_primes.empty() || gcd_primes.back() != q) gcd_primes.push_back(q);
  }
  for (const Int& q : gcd_primes) {
    if (q <= z || q > f_floor) continue;
    Int rp = rho_quadratic_prime_sq(f, q);
    sum_rho_p2 += frac(rp, q * q);
    sum_rho += Rat(rp);
  }
  Int sum_p(0);
  {
    std::vector<Int> fs = factorize(f.delta);
    for (size_t i = 0; i < fs.size(); i++) {
      if (i > 0 && fs[i] == fs[i - 1]) continue;
      const Int& q = fs[i];
      if (q <= z || q > f_floor) continue;
      if (divides(q, g)) continue;
      sum_p += q;
    }
  }
  int omega_delta = omega(f.delta);

  Rat mid = Rat(y - x) * (sum_rho_p2 + frac(omega_delta, z) + frac(4, z));
  Rat tail = sum_rho + Rat(sum_p) + Rat(2 * (pi_f - pi_z));

  const mpfr_prec_t prec = 256;
  CertifiedReal ft = feller_tornier(10000);
  Interval lower_iv =
      Interval::from_rat(Rat(y - x) * prod_delta * prod_gcd, prec) * ft.iv -
      Interval::from_rat(blob + mid + tail, prec);

  SieveBracket out{CertifiedReal::from_interval(lower_iv), CertifiedReal::from_rat(upper_rat),
                   count_squarefree_values(f, x, y), x, y, z};
  return out;
}

SquarefreeCensus count_P3_squarefree_plus(const Int& a) {
  if (a < 1) throw std::domain_error("count_P3_squarefree_plus: trace must be >= 1");
  bool a_div3 = divides(3, a);
  Int count(0);
  Int bmax = floor_div(a * a, Int(3));
  for (Int b(1); b <= bmax; ++b) {
    if (a_div3 && divides(3, b)) continue;  // disc is 27 times an integer, never square-free
    Int lo = ceil_gminus(a, b);
    if (lo < 1) lo = 1;
    Int hi = floor_gplus(a, b);
    for (Int c = lo; c <= hi; ++c)
      if (is_squarefree(cubic_discriminant(a, b, c))) count += 1;
  }
  return SquarefreeCensus{count, CertifiedReal::from_rat(frac(count, pow_int(a, 5)))};
}

AlmostPrimeCount count_almost_prime_disc(const Int& a, const Int& b, long h, int k) {
  if (h < 2) throw std::domain_error("count_almost_prime_disc: H must be >= 2");
  bool ok = !is_perfect_square(a * a - 3 * b);
  Int count(0);
  for (long c = -h; c <= h; c++) {
    Int d = cubic_discriminant(a, b, Int(c));
    if (sgn(d) == 0) continue;
    if (omega_clamped_u64(checked_u64(d, "count_almost_prime_disc"), k) <= k) count += 1;
  }
  return AlmostPrimeCount{count, ok};
}

Int count_almost_prime_disc_box(long h, int k) {
  if (h < 2) throw std::domain_error("count_almost_prime_disc_box: H must be >= 2");
  if (h > 20000) throw std::domain_error("count_almost_prime_disc_box: H too large");
  Int count(0);
  for (long A = -h; A <= h; A++)
    for (long B = -h; B <= h; B++) {
      long p = -4 * A * A * A + 18 * A * B;
      long q = A * A * B * B - 4 * B * B * B;
      long local = 0;
      for (long C = -h; C <= h; C++) {
        long d = (-27 * C + p) * C + q;
        if (d == 0) continue;
        u64 v = d < 0 ? static_cast<u64>(-d) : static_cast<u64>(d);
        if (omega_clamped_u64(v, k) <= k) local++;
      }
      count += local;
    }
  return count;
}

Int count_square_pairs(long h) {
  if (h < 2) throw std::domain_error("count_square_pairs: H must be >= 2");
  long total = 0;
  for (long A = -h; A <= h; A++) {
    long a2 = A * A;
    long zhi = static_cast<long>(isqrt_u64(static_cast<u64>(a2 + 3 * h)));
    long zlo = 0;
    long s = a2 - 3 * h;
    if (s > 0) {
      long r = static_cast<long>(isqrt_u64(static_cast<u64>(s)));
      zlo = (r * r == s) ? r : r + 1;
    }
    if (zhi < zlo) continue;
    // multiples of 3 in [zlo, zhi]
    long mult3 = zhi / 3 - (zlo == 0 ? -1 : (zlo - 1) / 3);
    long all = zhi - zlo + 1;
    total += (A % 3 == 0) ? mult3 : all - mult3;
  }
  return Int(total);
}

Int count_square_pairs_naive(long h) {
  if (h < 2) throw std::domain_error("count_square_pairs_naive: H must be >= 2");
  Int total(0);
  for (long A = -h; A <= h; A++)
    for (long B = -h; B <= h; B++)
      if (is_perfect_square(Int(A) * A - 3 * B)) total += 1;
  return total;
}

Int phi_sum_mod3(long n, int r) {
  if (n < 1) throw std::domain_error("phi_sum_mod3: N must be >= 1");
  if (r != 0 && r != 1) throw std::domain_error("phi_sum_mod3: residue must be 0 or 1");
  if (n > kSieveLimit) throw std::domain_error("phi_sum_mod3: N too large");
  std::vector<long> phi(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; i++) phi[static_cast<size_t>(i)] = i;
  for (long i = 2; i <= n; i++)
    if (phi[static_cast<size_t>(i)] == i)
      for (long j = i; j <= n; j += i)
        phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;
  long total = 0;
  for (long i = 1; i <= n; i++)
    if (i % 3 == r) total += phi[static_cast<size_t>(i)];
  return Int(total);
}

CertifiedReal feller_tornier(long truncation) {
  if (truncation < 2) throw std::domain_error("feller_tornier: truncation must be >= 2");
  const mpfr_prec_t prec = 256;
  Interval prod = Interval::from_long(1, prec);
  for (long p : primes_upto(truncation))
    prod = prod * Interval::from_rat(frac(p * p - 2, p * p), prec);
  Interval tail = hull(Interval::from_rat(frac(truncation - 4, truncation), prec),
                       Interval::from_long(1, prec));
  return CertifiedReal::from_interval(prod * tail);
}

}  // namespace rootcensus
