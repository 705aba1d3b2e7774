#include "rootcensus/maclaurin.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace rootcensus {

namespace {

Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

Int factorial(unsigned long m) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

void add_prime_factors(std::map<long, Rat>& m, Int v, int dir) {
  for (long p = 2; Int(p) * p <= v; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
      v /= p;
      m[p] += dir;
    }
  }
  if (v > 1) {
    if (!fits_long(v)) throw std::domain_error("prime factor does not fit in a machine word");
    m[v.get_si()] += dir;
  }
}

void strip_zeros(std::map<long, Rat>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (sgn(it->second) == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

std::optional<Int> interval_floor(const Interval& v) {
  Int a, b;
  mpfr_get_z(a.get_mpz_t(), v.lo(), MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), v.hi(), MPFR_RNDD);
  if (a == b) return a;
  return std::nullopt;
}

Int ev_floor(const ExponentVector& v) {
  if (v.is_rational()) return rat_floor(v.to_rat());
  for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2)
    if (auto f = interval_floor(v.to_interval(prec))) return *f;
  throw std::runtime_error("floor of an irrational prime-power product did not resolve");
}

ExponentVector ev_max(const ExponentVector& a, const ExponentVector& b) {
  return a.less_than(b) ? b : a;
}

}  // namespace

ExponentVector ExponentVector::from_int(const Int& v) {
  if (v < 1) throw std::domain_error("exponent vectors represent positive values");
  ExponentVector out;
  add_prime_factors(out.e_, v, +1);
  strip_zeros(out.e_);
  return out;
}

ExponentVector ExponentVector::from_rat(const Rat& q) {
  if (sgn(q) <= 0) throw std::domain_error("exponent vectors represent positive values");
  ExponentVector out;
  add_prime_factors(out.e_, Int(q.get_num()), +1);
  add_prime_factors(out.e_, Int(q.get_den()), -1);
  strip_zeros(out.e_);
  return out;
}

ExponentVector ExponentVector::pow(const Rat& e) const {
  ExponentVector out;
  if (sgn(e) == 0) return out;
  for (const auto& [p, x] : e_) out.e_[p] = x * e;
  return out;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out = a;
  for (const auto& [p, x] : b.e_) out.e_[p] += x;
  strip_zeros(out.e_);
  return out;
}

bool ExponentVector::is_rational() const {
  for (const auto& [p, x] : e_)
    if (x.get_den() != 1) return false;
  return true;
}

Rat ExponentVector::to_rat() const {
  Rat r(1);
  for (const auto& [p, x] : e_) {
    if (x.get_den() != 1) throw std::domain_error("value is irrational");
    if (!fits_long(Int(x.get_num()))) throw std::domain_error("exponent too large");
    long ex = x.get_num().get_si();
    if (ex > 0)
      r *= pow_int(Int(p), static_cast<unsigned long>(ex));
    else
      r /= pow_int(Int(p), static_cast<unsigned long>(-ex));
  }
  return r;
}

int ExponentVector::compare_one() const {
  if (e_.empty()) return 0;
  bool all_pos = true, all_neg = true;
  for (const auto& [p, x] : e_) {
    if (sgn(x) > 0)
      all_neg = false;
    else
      all_pos = false;
  }
  if (all_pos) return 1;
  if (all_neg) return -1;
  // mixed signs: the log is a nonzero rational combination of log p
  for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2) {
    Interval sum = Interval::from_long(0, prec);
    for (const auto& [p, x] : e_)
      sum = sum + Interval::from_rat(x, prec) * log(Interval::from_long(p, prec));
    if (sum.certainly_positive()) return 1;
    if (neg(sum).certainly_positive()) return -1;
  }
  throw std::runtime_error("sign of a prime-power product did not resolve");
}

bool ExponentVector::less_than(const ExponentVector& o) const {
  return (*this * o.pow(Rat(-1))).compare_one() < 0;
}

Interval ExponentVector::to_interval(mpfr_prec_t prec) const {
  Interval out = Interval::from_long(1, prec);
  for (const auto& [p, x] : e_) out = out * pow_q(Interval::from_long(p, prec), x);
  return out;
}

CertifiedReal ExponentVector::to_certified(mpfr_prec_t prec) const {
  if (is_rational()) return CertifiedReal::from_rat(to_rat(), prec);
  return CertifiedReal::from_interval(to_interval(prec));
}

BSequence BSequence::from_rats(int n, const std::vector<Rat>& b) {
  if (n < 2) throw std::domain_error("sequence length must be at least 2");
  if (static_cast<int>(b.size()) != n - 1)
    throw std::domain_error("expected n-1 growth bounds");
  BSequence out;
  out.n = n;
  for (const Rat& q : b) out.entries.push_back(ExponentVector::from_rat(q));
  return out;
}

BSequence BSequence::binomial(int n) {
  if (n < 2) throw std::domain_error("sequence length must be at least 2");
  BSequence out;
  out.n = n;
  for (int k = 1; k <= n - 1; k++) {
    ExponentVector num = ExponentVector::from_int(rootcensus::binomial(n, k + 1));
    ExponentVector den = ExponentVector::from_int(rootcensus::binomial(n, k));
    out.entries.push_back(num * den.pow(frac(-(k + 1), k)));
  }
  return out;
}

Int count_SB(const Int& a, const BSequence& bs) {
  if (bs.n < 2 || static_cast<int>(bs.entries.size()) != bs.n - 1)
    throw std::domain_error("malformed growth-bound sequence");
  if (a < 1) return 0;
  int n = bs.n;
  // largest m with m <= B_k x^{(k+1)/k}, or -1-ish when none
  auto level_max = [&](int k, const Int& x) -> Int {
    ExponentVector v =
        bs.entries[static_cast<size_t>(k - 1)] * ExponentVector::from_int(x).pow(frac(k + 1, k));
    return ev_floor(v);
  };
  std::function<Int(int, const Int&)> from = [&](int k, const Int& ak) -> Int {
    Int m = level_max(k, ak);
    if (m < 1) return Int(0);
    if (k + 1 == n) return m;
    Int total(0);
    for (Int v(1); v <= m; v++) total += from(k + 1, v);
    return total;
  };
  return from(1, a);
}

Int count_attainable(int n, const Int& a) {
  if (n < 2) throw std::domain_error("need degree at least 2");
  if (a < 1) return 0;
  // largest m >= 0 with m^k binom(n,k)^{k+1} <= x^{k+1} binom(n,k+1)^k
  auto level_max = [&](int k, const Int& x) -> Int {
    Int rhs = pow_int(x, static_cast<unsigned long>(k + 1)) *
              pow_int(binomial(n, k + 1), static_cast<unsigned long>(k));
    Int den = pow_int(binomial(n, k), static_cast<unsigned long>(k + 1));
    Int m = ikth_root_floor(rhs / den, k);
    while (pow_int(m + 1, static_cast<unsigned long>(k)) * den <= rhs) m += 1;
    while (m > 0 && pow_int(m, static_cast<unsigned long>(k)) * den > rhs) m -= 1;
    return m;
  };
  std::function<Int(int, const Int&)> from = [&](int k, const Int& ak) -> Int {
    Int m = level_max(k, ak);
    if (m < 1) return Int(0);
    if (k + 1 == n) return m;
    Int total(0);
    for (Int v(1); v <= m; v++) total += from(k + 1, v);
    return total;
  };
  return from(1, a);
}

std::pair<Rat, CertifiedReal> phi_psi_binomial(int n) {
  if (n < 2) throw std::domain_error("need degree at least 2");
  Int num = pow_int(Int(2), static_cast<unsigned long>(n - 1)) *
            factorial(static_cast<unsigned long>(n + 1));
  Int den = factorial(static_cast<unsigned long>(2 * n)) *
            pow_int(Int(n), static_cast<unsigned long>((n * n + n - 4) / 2));
  for (int k = 1; k <= n - 2; k++) num *= binomial(n, k);
  Rat phi = frac(num, den);

  Rat t_last = frac(static_cast<long>(n - 1) * (n + 2), 2);
  ExponentVector psi = ExponentVector::from_int(Int(n - 1)) *
                       ExponentVector::from_int(Int(n)).pow(frac(n, n - 1) - t_last);
  for (int k = 1; k <= n - 2; k++)
    psi = psi * ExponentVector::from_int(binomial(n, k)).pow(frac(k + 1, k));
  return {phi, psi.to_certified()};
}

PhiPsi phi_psi_general(const BSequence& bs) {
  if (bs.n < 2 || static_cast<int>(bs.entries.size()) != bs.n - 1)
    throw std::domain_error("malformed growth-bound sequence");
  int n = bs.n;
  Int pre_num = pow_int(Int(2), static_cast<unsigned long>(n - 1)) * n *
                factorial(static_cast<unsigned long>(n + 1));
  ExponentVector phi =
      ExponentVector::from_rat(frac(pre_num, factorial(static_cast<unsigned long>(2 * n))));
  for (int k = 1; k <= n - 1; k++)
    phi = phi * bs.entries[static_cast<size_t>(k - 1)].pow(
                    frac(static_cast<long>(n - k) * (n + k + 1), 2 * (k + 1)));

  ExponentVector psi = ExponentVector::from_int(Int(n - 1));
  for (int k = 1; k <= n - 2; k++) {
    const ExponentVector& b = bs.entries[static_cast<size_t>(k - 1)];
    psi = psi * b.pow(frac(static_cast<long>(n - k - 1) * (n + k + 2), 2 * (k + 1)));
    psi = psi * ev_max(ExponentVector::one(), b.pow(frac(-1, k + 1)));
  }
  return {phi.to_certified(), psi.to_certified()};
}

std::vector<Rat> t_sequence(int n) {
  if (n < 2) throw std::domain_error("need degree at least 2");
  std::vector<Rat> t;
  for (int k = 0; k <= n - 1; k++)
    t.push_back(frac(static_cast<long>(k) * (2 * n - k + 1), 2 * (n - k)));
  return t;
}

std::vector<Rat> u_sequence(int n) {
  if (n < 2) throw std::domain_error("need degree at least 2");
  std::vector<Rat> u;
  for (int k = 1; k <= n - 1; k++)
    u.push_back(frac(static_cast<long>(k - 1) * (2 * n - k + 2), 2 * (n - k)));
  return u;
}

bool check_simplification(const std::vector<Rat>& ds) {
  int n = static_cast<int>(ds.size());
  if (n < 2) throw std::domain_error("need at least two values");
  std::vector<ExponentVector> d, e;
  for (const Rat& q : ds) d.push_back(ExponentVector::from_rat(q));
  for (int k = 1; k <= n - 1; k++)
    e.push_back(d[static_cast<size_t>(k)] * d[static_cast<size_t>(k - 1)].pow(frac(-(k + 1), k)));

  Rat t_last = frac(static_cast<long>(n - 1) * (n + 2), 2);

  ExponentVector lhs1 = ExponentVector::one();
  for (int k = 1; k <= n - 1; k++)
    lhs1 = lhs1 * e[static_cast<size_t>(k - 1)].pow(
                      frac(static_cast<long>(n - k) * (n + k + 1), 2 * (k + 1)));
  ExponentVector rhs1 = d[0].pow(-t_last);
  for (int k = 2; k <= n; k++) rhs1 = rhs1 * d[static_cast<size_t>(k - 1)];
  if (!(lhs1 == rhs1)) return false;

  ExponentVector lhs2 = ExponentVector::one();
  for (int k = 1; k <= n - 2; k++) {
    lhs2 = lhs2 * e[static_cast<size_t>(k - 1)].pow(
                      frac(static_cast<long>(n - k - 1) * (n + k + 2), 2 * (k + 1)));
    lhs2 = lhs2 * ev_max(ExponentVector::one(), e[static_cast<size_t>(k - 1)].pow(frac(-1, k + 1)));
  }
  ExponentVector rhs2 = d[static_cast<size_t>(n - 2)] * d[0].pow(Rat(1) - t_last);
  for (int k = 1; k <= n - 2; k++) rhs2 = rhs2 * d[static_cast<size_t>(k - 1)];
  for (int k = 1; k <= n - 2; k++)
    rhs2 = rhs2 * ev_max(d[static_cast<size_t>(k - 1)].pow(frac(1, k)),
                         d[static_cast<size_t>(k)].pow(frac(1, k + 1)));
  return lhs2 == rhs2;
}

CertifiedReal tao_upper_bound(int n, const Int& a1, const Int& a2) {
  if (n < 3) throw std::domain_error("need degree at least 3");
  if (a1 == 0 && a2 == 0) return CertifiedReal::from_rat(Rat(0));
  const mpfr_prec_t prec = 256;
  long e = (static_cast<long>(n) * n + n - 6) / 2;

  Int binprod(1);
  for (int k = 1; k <= n - 3; k++) binprod *= binomial(n, k);
  Int powprod(1);
  for (int k = 3; k <= n; k++) powprod *= pow_int(Int(k), static_cast<unsigned long>(k));

  Interval c = Interval::from_long(160, prec) * exp(Interval::from_rat(Rat(7), prec));
  Interval m = imax(Interval::from_rat(frac(abs(a1), Int(n)), prec),
                    sqrt(Interval::from_rat(frac(abs(a2), Int(n) * (n - 1)), prec)));
  Interval out = Interval::from_int(binprod, prec) * sqrt(Interval::from_int(powprod, prec)) *
                 pow_q(Interval::from_long(3, prec) * c, Rat(e)) * pow_q(m, Rat(e));
  return CertifiedReal::from_interval(out);
}

bool tao_inequality_check(const std::vector<Rat>& roots) {
  int n = static_cast<int>(roots.size());
  // expand prod (X - r) and read off the symmetric means
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (size_t i = 0; i < c.size(); i++) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  std::vector<Rat> s(static_cast<size_t>(n) + 1, Rat(0));
  for (int k = 1; k <= n; k++) {
    Rat ek = c[static_cast<size_t>(n - k)];
    if (k % 2 == 1) ek = -ek;
    s[static_cast<size_t>(k)] = ek / binomial(n, k);
    s[static_cast<size_t>(k)].canonicalize();
  }
  auto rat_abs = [](const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; };

  // |s_k|^{1/k} <= C (k/j)^{1/2} |s_j|^{1/j}, cleared to the 2jk-th power:
  // |s_k|^{2j} j^{jk} <= C^{2jk} k^{jk} |s_j|^{2k}.  1 = holds, -1 = fails
  // certainly, 0 = unresolved at this precision.
  auto term_ok = [&](int k, int j, mpfr_prec_t prec) -> int {
    Rat sj = rat_abs(s[static_cast<size_t>(j)]);
    if (sgn(sj) == 0) return -1;
    Rat lhs = pow_rat(rat_abs(s[static_cast<size_t>(k)]), 2 * j) *
              pow_int(Int(j), static_cast<unsigned long>(j) * k);
    Rat rhs_rat =
        pow_rat(sj, 2 * k) * pow_int(Int(k), static_cast<unsigned long>(j) * k);
    Interval c = Interval::from_long(160, prec) * exp(Interval::from_rat(Rat(7), prec));
    Interval rhs = pow_q(c, Rat(2L * j * k)) * Interval::from_rat(rhs_rat, prec);
    if (rhs.certainly_ge(lhs)) return 1;
    if (rhs.certainly_le(lhs)) return -1;
    return 0;
  };

  for (int l = 1; l < n; l++)
    for (int k = l + 1; k <= n; k++) {
      if (sgn(s[static_cast<size_t>(k)]) == 0) continue;
      bool ok = false;
      for (int j : {l, l + 1}) {
        int verdict = 0;
        for (mpfr_prec_t prec = 256; prec <= (1 << 14) && verdict == 0; prec *= 2)
          verdict = term_ok(k, j, prec);
        if (verdict == 1) {
          ok = true;
          break;
        }
        if (verdict == 0) throw std::runtime_error("inequality comparison did not resolve");
      }
      if (!ok) return false;
    }
  return true;
}

}  // namespace rootcensus
