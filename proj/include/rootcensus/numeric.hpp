#ifndef ROOTCENSUS_NUMERIC_HPP
#define ROOTCENSUS_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rootcensus {

using Int = mpz_class;
using Rat = mpq_class;

// Floor division a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  if (sgn(b) <= 0) throw std::domain_error("floor_div: divisor must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  if (sgn(b) <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest r with r*r <= m.  Requires m >= 0.
inline Int isqrt(const Int& m) {
  if (sgn(m) < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Largest r with r^k <= m.  Requires m >= 0, k >= 1.
inline Int ikth_root_floor(const Int& m, unsigned long k) {
  if (sgn(m) < 0) throw std::domain_error("ikth_root_floor: negative argument");
  if (k == 0) throw std::domain_error("ikth_root_floor: k must be >= 1");
  Int r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  return r;
}

inline bool is_perfect_square(const Int& m) {
  return sgn(m) >= 0 && mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// q^e for integer e (negative allowed, q != 0 then).
inline Rat pow_rat(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long a = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (inv) {
    if (sgn(r) == 0) throw std::domain_error("pow_rat: zero to negative power");
    r = 1 / r;
  }
  return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline bool fits_long(const Int& m) { return m.fits_slong_p() != 0; }

// Parses "p" or "p/q" with optional sign; q > 0 after canonicalization.
inline Rat parse_rational(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  if (sgn(Rat(r.get_den())) == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace rootcensus

#endif
