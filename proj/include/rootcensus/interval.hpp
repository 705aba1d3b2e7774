#ifndef ROOTCENSUS_INTERVAL_HPP
#define ROOTCENSUS_INTERVAL_HPP

#include <mpfr.h>

#include <optional>
#include <string>

#include "rootcensus/numeric.hpp"

namespace rootcensus {

// Closed interval [lo, hi] with mpfr endpoints, lo rounded down and hi rounded
// up by every operation, so the true value of any computed expression is
// always contained in the interval.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_rat(const Rat& q, mpfr_prec_t prec = 128);
  static Interval from_int(const Int& n, mpfr_prec_t prec = 128);
  static Interval from_long(long n, mpfr_prec_t prec = 128);
  static Interval pi(mpfr_prec_t prec = 128);

  mpfr_prec_t prec() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_nonneg() const { return mpfr_sgn(lo_) >= 0; }
  bool certainly_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
  bool certainly_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
  bool certainly_ge(const Rat& q) const;
  bool certainly_le(const Rat& q) const;
  bool contains(const Rat& q) const;

  // Decimal rendering of an endpoint, directed so the printed number still
  // brackets the true value.
  std::string lo_str(int digits = 15) const;
  std::string hi_str(int digits = 15) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval neg(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval log(const Interval& a);
  friend Interval pow_q(const Interval& a, const Rat& e);
  friend Interval imin(const Interval& a, const Interval& b);
  friend Interval imax(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
// a^e for a certainly positive (or a == [0,*] with e > 0), rational exponent.
Interval pow_q(const Interval& a, const Rat& e);
Interval imin(const Interval& a, const Interval& b);
Interval imax(const Interval& a, const Interval& b);
// Smallest interval containing both arguments.
Interval hull(const Interval& a, const Interval& b);

// A real number carried as an enclosure, with the exact rational kept when the
// value happens to be rational.
struct CertifiedReal {
  std::optional<Rat> exact;
  Interval iv;

  static CertifiedReal from_rat(const Rat& q, mpfr_prec_t prec = 128) {
    return CertifiedReal{q, Interval::from_rat(q, prec)};
  }
  static CertifiedReal from_interval(Interval v) { return CertifiedReal{std::nullopt, std::move(v)}; }

  bool is_exact() const { return exact.has_value(); }
  // True value <= q, certified.
  bool certainly_le(const Rat& q) const { return exact ? *exact <= q : iv.certainly_le(q); }
  bool certainly_ge(const Rat& q) const { return exact ? *exact >= q : iv.certainly_ge(q); }
  std::string upper_str(int digits = 15) const {
    return exact ? exact->get_str() : iv.hi_str(digits);
  }
  std::string lower_str(int digits = 15) const {
    return exact ? exact->get_str() : iv.lo_str(digits);
  }
};

}  // namespace rootcensus

#endif
