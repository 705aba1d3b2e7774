#include "rootcensus/cubic_census.hpp"

#include <stdexcept>

namespace rootcensus {

// Both bounds rest on the same fact: for integer K, M > 0 and x = sqrt(T)
// with T a nonnegative integer, floor((K + x)/M) = floor((K + floor x)/M) and
// ceil((K - x)/M) = ceil((K - floor x)/M).  When T is a perfect square this
// is trivial; otherwise x is irrational, so floor(K + x) = K + floor(x) and
// ceil(K - x) = K - floor(x), and the nested floor/ceil identities for
// integer numerators finish it.
static Int floor_plus_sqrt(const Int& k, const Int& t, const Int& m) {
  return floor_div(k + isqrt(t), m);
}
static Int ceil_minus_sqrt(const Int& k, const Int& t, const Int& m) {
  return ceil_div(k - isqrt(t), m);
}

Int floor_gplus(const Int& a, const Int& b) {
  Int d = a * a - 3 * b;
  if (sgn(d) < 0) throw std::domain_error("floor_gplus: A^2 - 3B < 0");
  Int n = 9 * a * b - 2 * a * a * a;
  return floor_plus_sqrt(n, 4 * d * d * d, Int(27));
}

Int ceil_gminus(const Int& a, const Int& b) {
  Int d = a * a - 3 * b;
  if (sgn(d) < 0) throw std::domain_error("ceil_gminus: A^2 - 3B < 0");
  Int n = 9 * a * b - 2 * a * a * a;
  return ceil_minus_sqrt(n, 4 * d * d * d, Int(27));
}

Int count_P3_plus_range(const Int& a, const Int& b_lo, const Int& b_hi) {
  if (sgn(a) < 0) throw std::domain_error("count_P3_plus_range: negative trace");
  Int lo = b_lo < 1 ? Int(1) : b_lo;
  Int b_mid = floor_div(a * a, Int(4));   // Gminus <= 0 up to here
  Int b_max = floor_div(a * a, Int(3));   // A^2 - 3B >= 0 cutoff
  Int hi = b_hi > b_max ? b_max : b_hi;
  Int total(0);
  for (Int b = lo; b <= hi; b++) {
    Int fg = floor_gplus(a, b);
    Int cg = b <= b_mid ? Int(1) : ceil_gminus(a, b);
    if (cg < 1) cg = 1;
    Int cnt = fg - cg + 1;
    if (sgn(cnt) > 0) total += cnt;
  }
  return total;
}

Int count_P3_plus(const Int& a) {
  if (sgn(a) < 0) throw std::domain_error("count_P3_plus: negative trace");
  return count_P3_plus_range(a, Int(1), floor_div(a * a, Int(3)));
}

Int count_P3_zeroplus(const Int& a) {
  if (sgn(a) < 0) throw std::domain_error("count_P3_zeroplus: negative trace");
  if (sgn(a) == 0) return Int(1);  // X^3 alone
  // Members with C = 0 are X (X^2 - AX + B) with 0 <= B <= A^2/4; members
  // with C > 0 force B > 0 and are exactly the strict census.
  return count_P3_plus(a) + floor_div(a * a, Int(4)) + 1;
}

Int count_P3_scaled(const Int& a, const RationalScaling& s, bool strict) {
  if (sgn(a) < 0) throw std::domain_error("count_P3_scaled: negative trace");
  if (sgn(s.alpha) <= 0 || sgn(s.beta) <= 0 || sgn(s.gamma) <= 0)
    throw std::domain_error("count_P3_scaled: scaling entries must be positive");
  const Int a1 = s.alpha.get_num(), a2 = s.alpha.get_den();
  const Int b1 = s.beta.get_num(), b2 = s.beta.get_den();
  const Int c1 = s.gamma.get_num(), c2 = s.gamma.get_den();

  // With B fixed, the window Gminus <= gamma C <= Gplus clears to
  //   M C <= K + sqrt(T)  and  M C >= K - sqrt(T)
  // where, writing P/Q = (alpha A)^2 - 3 beta B and U/R = 9ab - 2a^3,
  //   M = 27 c1 R Q^2, K = U c2 Q^2, T = 4 c2^2 R^2 P^3 Q.
  const Int q = a2 * a2 * b2;
  const Int r = a2 * a2 * a2 * b2;
  const Int m = 27 * c1 * r * q * q;
  const Int cut = strict ? Int(1) : Int(0);

  Int b_max = floor_div(a1 * a1 * a * a * b2, 3 * a2 * a2 * b1);  // P >= 0
  Int total(0);
  for (Int b = cut; b <= b_max; b++) {
    Int p = a1 * a1 * a * a * b2 - 3 * a2 * a2 * b1 * b;
    Int u = 9 * a1 * b1 * a * b * a2 * a2 - 2 * a1 * a1 * a1 * a * a * a * b2;
    Int k = u * c2 * q * q;
    Int t = 4 * c2 * c2 * r * r * p * p * p * q;
    Int chi = floor_plus_sqrt(k, t, m);
    Int clo = ceil_minus_sqrt(k, t, m);
    if (clo < cut) clo = cut;
    Int cnt = chi - clo + 1;
    if (sgn(cnt) > 0) total += cnt;
  }
  return total;
}

MainTermError main_term_and_error(const Int& a, const RationalScaling& s, bool strict) {
  const Rat al = s.alpha, be = s.beta, ga = s.gamma;
  Rat a5 = Rat(pow_int(a, 5));
  MainTermError r;
  r.main = pow_rat(al, 5) * a5 / (480 * be * ga);
  Rat mid = strict ? (1 / be + 1 / ga) : (2 / be + 1 / ga);
  r.budget = pow_rat(al, 3) / ga * Rat(pow_int(a, 3)) + mid * al * al * Rat(a * a) +
             al * be / ga * Rat(a);
  return r;
}

Int count_P3_bounded_disc(const Int& a, const Int& b, const Int& d) {
  if (sgn(d) < 0) return Int(0);
  Int d0 = a * a - 3 * b;
  if (sgn(d0) < 0) return Int(0);
  Int fg = floor_gplus(a, b);
  Int cg = ceil_gminus(a, b);
  Int full = fg - cg + 1;
  if (sgn(full) <= 0) return Int(0);
  // disc(C) = -27 C^2 + n1 C + m1 exceeds d exactly on the open interval
  // (rminus, rplus) with rpm = (n1 +- sqrt(E)) / 54, E = 16 d0^3 - 108 d.
  Int e = 16 * d0 * d0 * d0 - 108 * d;
  if (sgn(e) <= 0) return full;
  Int n1 = -4 * a * a * a + 18 * a * b;
  Int s = isqrt(e);
  bool exact = (s * s == e);
  Int hi_excl, lo_excl;
  if (exact) {
    Int num = n1 + s;
    hi_excl = floor_div(num, Int(54));
    if (hi_excl * 54 == num) hi_excl -= 1;  // strict inequality
    num = n1 - s;
    lo_excl = ceil_div(num, Int(54));
    if (lo_excl * 54 == num) lo_excl += 1;
  } else {
    hi_excl = floor_div(n1 + s, Int(54));
    lo_excl = ceil_div(n1 - s, Int(54));
  }
  Int excluded = hi_excl - lo_excl + 1;
  if (sgn(excluded) < 0) excluded = 0;
  Int res = full - excluded;
  return sgn(res) > 0 ? res : Int(0);
}

W1Bounds w1_upper_bound(const Int& a, const Int& b, const Int& d, mpfr_prec_t prec) {
  if (sgn(d) < 0) throw std::domain_error("w1_upper_bound: D must be nonnegative");
  auto frac = [](const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  W1Bounds out{std::nullopt, CertifiedReal::from_rat(Rat(0), prec), 1};
  // global bound 2/(3 sqrt 3) sqrt(D) = sqrt(108 D) / 27
  Int g = 108 * d;
  if (is_perfect_square(g)) {
    out.global = CertifiedReal::from_rat(frac(isqrt(g), Int(27)), prec);
  } else {
    out.global =
        CertifiedReal::from_interval(sqrt(Interval::from_int(g, prec)) * Interval::from_rat(Rat(1, 27), prec));
  }
  Int d0 = a * a - 3 * b;
  if (sgn(d0) < 0) return out;
  if (27 * d >= 4 * d0 * d0 * d0) {
    // 4/27 d0^(3/2)
    if (is_perfect_square(d0)) {
      Int t = isqrt(d0);
      out.piecewise = CertifiedReal::from_rat(frac(4 * t * t * t, Int(27)), prec);
    } else {
      out.piecewise = CertifiedReal::from_interval(sqrt(Interval::from_int(d0 * d0 * d0, prec)) *
                                                   Interval::from_rat(Rat(4, 27), prec));
    }
  } else {
    // D / d0^(3/2); here d0 > 0 and the sublevel set has two components
    out.pieces = 2;
    if (is_perfect_square(d0)) {
      Int t = isqrt(d0);
      out.piecewise = CertifiedReal::from_rat(frac(d, t * t * t), prec);
    } else {
      out.piecewise = CertifiedReal::from_interval(Interval::from_int(d, prec) /
                                                   sqrt(Interval::from_int(d0 * d0 * d0, prec)));
    }
  }
  return out;
}

}  // namespace rootcensus
