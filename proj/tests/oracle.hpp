// Brute-force reference implementations and generators shared by the test
// binaries.  Everything here is deliberately naive: these are the oracles the
// fast library paths are checked against.
#ifndef ROOTCENSUS_TESTS_ORACLE_HPP
#define ROOTCENSUS_TESTS_ORACLE_HPP

#include <cmath>
#include <random>
#include <vector>

#include "rootcensus/polynomial.hpp"
#include "rootcensus/roots.hpp"

namespace rootcensus::oracle {

// (qX - p) factors multiplied out; rational roots p/q.
inline IntPoly poly_from_rational_roots(const std::vector<Rat>& roots) {
  IntPoly f = IntPoly::constant(Int(1));
  for (const Rat& r : roots) {
    std::vector<Int> lin{-r.get_num(), r.get_den()};
    f = f * IntPoly(std::move(lin));
  }
  return f;
}

// X^2 + aX + b with a^2 < 4b (no real roots).
inline IntPoly complex_quadratic(const Int& a, const Int& b) {
  return IntPoly(std::vector<Int>{b, a, Int(1)});
}

// All real roots of f located by the derivative-chain bisection in plain
// doubles.  Only trustworthy when the roots are simple and well separated.
inline std::vector<double> fp_real_roots(const IntPoly& f) {
  int n = f.degree();
  std::vector<std::vector<double>> ds(n + 1);
  std::vector<double> base(f.coeffs().size());
  for (size_t i = 0; i < base.size(); i++) base[i] = f.coeffs()[i].get_d();
  ds[0] = base;
  for (int k = 1; k <= n; k++) {
    const auto& p = ds[k - 1];
    std::vector<double> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); i++) d[i - 1] = p[i] * static_cast<double>(i);
    ds[k] = d;
  }
  auto eval = [](const std::vector<double>& p, double x) {
    double r = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; i--) r = r * x + p[i];
    return r;
  };
  double bound = 1.0;
  for (int i = 0; i < n; i++) bound = std::max(bound, std::fabs(base[i] / base[n]));
  bound += 1.0;
  // roots[k] = real roots of the (n-k)-th derivative, found level by level.
  std::vector<double> prev;  // critical points of the current level
  for (int k = n - 1; k >= 0; k--) {
    const auto& p = ds[k];
    std::vector<double> pts;
    pts.push_back(-bound);
    for (double c : prev) pts.push_back(c);
    pts.push_back(bound);
    std::vector<double> cur;
    for (size_t i = 0; i + 1 < pts.size(); i++) {
      double a = pts[i], b = pts[i + 1];
      double fa = eval(p, a), fb = eval(p, b);
      if (fa == 0) cur.push_back(a);
      if (fa * fb < 0) {
        for (int it = 0; it < 200; it++) {
          double m = 0.5 * (a + b);
          double fm = eval(p, m);
          if (fm == 0) break;
          if (fa * fm < 0) {
            b = m;
          } else {
            a = m;
            fa = fm;
          }
        }
        cur.push_back(0.5 * (a + b));
      }
    }
    double last = eval(p, pts.back());
    if (last == 0) cur.push_back(pts.back());
    prev = cur;
  }
  return prev;
}

}  // namespace rootcensus::oracle

#endif
