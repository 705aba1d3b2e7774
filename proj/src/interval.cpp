#include "rootcensus/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace rootcensus {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rat(const Rat& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_int(const Int& n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, n, MPFR_RNDD);
  mpfr_set_si(r.hi_, n, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

bool Interval::certainly_ge(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }
bool Interval::certainly_le(const Rat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
bool Interval::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

static std::string fmt(const mpfr_t& x, mpfr_rnd_t rnd, int digits) {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*R*g", digits, rnd, x);
  return std::string(buf);
}

std::string Interval::lo_str(int digits) const { return fmt(lo_, MPFR_RNDD, digits); }
std::string Interval::hi_str(int digits) const { return fmt(hi_, MPFR_RNDU, digits); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval neg(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&a.lo_, &a.hi_};
  const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_mul(t, *as[i], *bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *as[i], *bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
    throw std::domain_error("Interval division by interval containing zero");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&a.lo_, &a.hi_};
  const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_div(t, *as[i], *bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, *as[i], *bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("Interval sqrt of possibly negative value");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("Interval log of possibly nonpositive value");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval pow_q(const Interval& a, const Rat& e) {
  if (sgn(e) == 0) return Interval::from_long(1, a.prec_);
  if (mpfr_sgn(a.lo_) == 0 && mpfr_sgn(a.hi_) == 0) {
    if (sgn(e) > 0) return Interval::from_long(0, a.prec_);
    throw std::domain_error("pow_q: zero base with negative exponent");
  }
  // Integer exponents are handled exactly via mpfr_pow_z on each endpoint.
  if (e.get_den() == 1) {
    Interval r(a.prec_);
    bool positive_even = false;
    if (mpfr_sgn(a.lo_) < 0) {
      // Only even integer powers keep the enclosure simple; odd powers are
      // monotone.  Restrict to what the callers need: monotone odd powers and
      // nonnegative bases.
      if (mpz_even_p(e.get_num().get_mpz_t())) positive_even = true;
    }
    if (positive_even) throw std::domain_error("pow_q: even power of mixed-sign interval");
    if (sgn(e) < 0) {
      if (mpfr_sgn(a.lo_) <= 0 && mpfr_sgn(a.hi_) >= 0)
        throw std::domain_error("pow_q: negative power of interval containing zero");
      Interval s(a.prec_);
      mpfr_pow_z(s.lo_, a.hi_, e.get_num().get_mpz_t(), MPFR_RNDD);
      mpfr_pow_z(s.hi_, a.lo_, e.get_num().get_mpz_t(), MPFR_RNDU);
      return s;
    }
    mpfr_pow_z(r.lo_, a.lo_, e.get_num().get_mpz_t(), MPFR_RNDD);
    mpfr_pow_z(r.hi_, a.hi_, e.get_num().get_mpz_t(), MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("pow_q: fractional power of possibly negative value");
  if (mpfr_sgn(a.lo_) == 0) {
    if (sgn(e) < 0) throw std::domain_error("pow_q: negative power of interval touching zero");
    // 0^e = 0 lower end; upper end via the positive endpoint.
    Interval hi_only(a.prec_);
    mpfr_set(hi_only.lo_, a.hi_, MPFR_RNDD);
    mpfr_set(hi_only.hi_, a.hi_, MPFR_RNDU);
    Interval p = pow_q(hi_only, e);
    Interval r2(a.prec_);
    mpfr_set_zero(r2.lo_, 1);
    mpfr_set(r2.hi_, p.hi_, MPFR_RNDU);
    return r2;
  }
  return exp(Interval::from_rat(e, a.prec_) * log(a));
}

Interval imin(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval imax(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

}  // namespace rootcensus
