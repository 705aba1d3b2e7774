#include "rootcensus/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rootcensus {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, int deg) {
  std::vector<Int> v(deg + 1, Int(0));
  v[deg] = c;
  return IntPoly(std::move(v));
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int r(0);
  for (int i = degree(); i >= 0; i--) r = r * x + c_[i];
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = degree(); i >= 0; i--) r = r * x + Rat(c_[i]);
  return r;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<Int> d(degree());
  for (int i = 1; i <= degree(); i++) d[i - 1] = c_[i] * i;
  return IntPoly(std::move(d));
}

int IntPoly::valuation_at_zero() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  int v = 0;
  while (sgn(c_[v]) == 0) v++;
  return v;
}

IntPoly IntPoly::shift_down(int k) const {
  if (k == 0) return *this;
  if (is_zero() || valuation_at_zero() < k)
    throw std::domain_error("shift_down: polynomial not divisible by X^k");
  return IntPoly(std::vector<Int>(c_.begin() + k, c_.end()));
}

Int IntPoly::content() const {
  Int g(0);
  for (const Int& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Int> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = c_[i] / g;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] += b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] -= b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); i++)
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = -c_[i];
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; i--) {
    if (sgn(c_[i]) == 0) continue;
    Int ab = abs(c_[i]);
    if (first) {
      if (sgn(c_[i]) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    }
    if (i == 0 || ab != 1) os << ab.get_str();
    if (i > 0) {
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c_.emplace_back(x);
}

void RatPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

const Rat& RatPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = degree(); i >= 0; i--) r = r * x + c_[i];
  return r;
}

int RatPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }
int RatPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }
int RatPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? sgn(leading()) : -sgn(leading());
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return RatPoly();
  std::vector<Rat> d(degree());
  for (int i = 1; i <= degree(); i++) d[i - 1] = c_[i] * i;
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = c_[i] * inv;
  return RatPoly(std::move(v));
}

IntPoly RatPoly::clear_denominators() const {
  if (is_zero()) return IntPoly();
  Int l(1);
  for (const Rat& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) {
    Rat s = c_[i] * Rat(l);
    v[i] = s.get_num();  // denominator is 1 by construction
  }
  return IntPoly(std::move(v)).primitive_part();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] += b.c_[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] -= b.c_[i];
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); i++)
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> v(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); i++) v[i] = s * a.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = -c_[i];
  return RatPoly(std::move(v));
}

void RatPoly::divmod(const RatPoly& n, const RatPoly& d, RatPoly& q, RatPoly& r) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = n.c_;
  int dn = static_cast<int>(rem.size()) - 1;
  int dd = d.degree();
  if (dn < dd) {
    q = RatPoly();
    r = RatPoly(std::move(rem));
    return;
  }
  std::vector<Rat> quo(dn - dd + 1, Rat(0));
  Rat invl = 1 / d.leading();
  for (int i = dn; i >= dd; i--) {
    Rat f = rem[i] * invl;
    if (sgn(f) != 0) {
      quo[i - dd] = f;
      for (int j = 0; j <= dd; j++) rem[i - dd + j] -= f * d.c_[j];
    }
  }
  q = RatPoly(std::move(quo));
  r = RatPoly(std::move(rem));
}

RatPoly gcd_monic(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    RatPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm over the rationals.
  RatPoly p(f), dp = p.derivative();
  RatPoly g = gcd_monic(p, dp);
  RatPoly bq, dq, tmp;
  RatPoly::divmod(p, g, bq, tmp);
  RatPoly yq;
  RatPoly::divmod(dp, g, yq, tmp);
  RatPoly z = yq - bq.derivative();
  int i = 1;
  while (bq.degree() > 0) {
    RatPoly ai = gcd_monic(bq, z);
    if (ai.degree() > 0) out.emplace_back(ai.clear_denominators(), i);
    RatPoly::divmod(bq, ai, tmp, yq);
    bq = tmp;
    RatPoly::divmod(z, ai, yq, tmp);
    z = yq - bq.derivative();
    i++;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
  if (f.degree() < 1) return IntPoly::constant(Int(1));
  RatPoly p(f);
  RatPoly g = gcd_monic(p, p.derivative());
  RatPoly q, r;
  RatPoly::divmod(p, g, q, r);
  return q.clear_denominators();
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return Int(0);
  RatPoly a(f), b(g);
  Rat acc(1);
  // Res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * Res(b, r)
  while (true) {
    if (b.degree() == 0) {
      acc *= pow_rat(b.leading(), a.degree());
      break;
    }
    RatPoly q, r;
    RatPoly::divmod(a, b, q, r);
    if (r.is_zero()) return Int(0);
    if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) acc = -acc;
    acc *= pow_rat(b.leading(), a.degree() - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
  if (acc.get_den() != 1) throw std::logic_error("resultant: non-integer result");
  return acc.get_num();
}

Int discriminant(const IntPoly& f) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  Int res = resultant(f, f.derivative());
  Rat d(res, f.leading());
  if ((Int(n) * (n - 1) / 2) % 2 != 0) d = -d;
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("discriminant: non-integer result");
  return d.get_num();
}

Int cubic_discriminant(const Int& a, const Int& b, const Int& c) {
  return -27 * c * c + (-4 * a * a * a + 18 * a * b) * c + (a * a * b * b - 4 * b * b * b);
}

MonicIntPoly::MonicIntPoly(int n_, std::vector<Int> a_) : n(n_), a(std::move(a_)) {
  if (n < 1) throw std::domain_error("MonicIntPoly: degree must be >= 1");
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("MonicIntPoly: need exactly n coefficients A_1..A_n");
}

IntPoly MonicIntPoly::to_poly() const {
  std::vector<Int> v(n + 1, Int(0));
  v[n] = 1;
  for (int k = 1; k <= n; k++) v[n - k] = (k % 2 == 0) ? a[k - 1] : -a[k - 1];
  return IntPoly(std::move(v));
}

std::string MonicIntPoly::str() const { return to_poly().str(); }

}  // namespace rootcensus
