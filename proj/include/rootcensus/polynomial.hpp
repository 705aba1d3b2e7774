#ifndef ROOTCENSUS_POLYNOMIAL_HPP
#define ROOTCENSUS_POLYNOMIAL_HPP

#include <vector>

#include "rootcensus/numeric.hpp"

namespace rootcensus {

// Dense integer polynomial, coefficients stored lowest degree first.  The
// coefficient vector of a nonzero polynomial never ends in zero; the zero
// polynomial has an empty vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  // Number of times X divides the polynomial (0 for nonzero constant term).
  int valuation_at_zero() const;
  IntPoly shift_down(int k) const;  // divide by X^k, requires divisibility

  Int content() const;             // gcd of coefficients, >= 0; sign of leading kept out
  IntPoly primitive_part() const;  // content removed, leading coefficient > 0

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  std::string str() const;  // human readable, highest degree first

 private:
  std::vector<Int> c_;
  void normalize();
};

// Rational polynomial used for remainder sequences and gcds.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

  RatPoly derivative() const;
  RatPoly monic() const;
  // Integer polynomial with the same roots: coefficients scaled by the lcm of
  // denominators, then made primitive.
  IntPoly clear_denominators() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);
  RatPoly operator-() const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  static void divmod(const RatPoly& n, const RatPoly& d, RatPoly& q, RatPoly& r);

 private:
  std::vector<Rat> c_;
  void normalize();
};

RatPoly gcd_monic(RatPoly a, RatPoly b);

// Square-free decomposition f = c * prod_i part[i]^(i+1), parts pairwise
// coprime, each primitive with positive leading coefficient (possibly
// constant 1 placeholders are omitted: the returned vector holds pairs
// (factor, multiplicity) with nonconstant factors only).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// f / gcd(f, f'), primitive, positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

// Resultant of two integer polynomials (exact, via a rational remainder
// sequence; degrees at this project's scale are small).
Int resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) * Res(f, f') / lc(f) for deg f = n >= 1.
Int discriminant(const IntPoly& f);

// Discriminant of X^3 - a X^2 + b X - c.
Int cubic_discriminant(const Int& a, const Int& b, const Int& c);

// Monic polynomial X^n - A1 X^(n-1) + A2 X^(n-2) - ... + (-1)^n An, stored by
// its coefficient sequence (A1, ..., An) under the alternating-sign
// convention: the elementary symmetric functions of the roots.
struct MonicIntPoly {
  int n = 0;
  std::vector<Int> a;  // a[k-1] = A_k, size n

  MonicIntPoly() = default;
  MonicIntPoly(int n_, std::vector<Int> a_);
  IntPoly to_poly() const;
  bool operator==(const MonicIntPoly& o) const { return n == o.n && a == o.a; }
  bool operator<(const MonicIntPoly& o) const { return a < o.a; }  // lexicographic on (A1..An)
  std::string str() const;
};

}  // namespace rootcensus

#endif
