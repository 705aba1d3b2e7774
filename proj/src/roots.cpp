#include "rootcensus/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootcensus {

SturmChain build_sturm(const RatPoly& g) {
  SturmChain ch;
  if (g.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
  ch.seq.push_back(g);
  if (g.degree() == 0) return ch;
  ch.seq.push_back(g.derivative());
  while (ch.seq.back().degree() > 0) {
    RatPoly q, r;
    RatPoly::divmod(ch.seq[ch.seq.size() - 2], ch.seq.back(), q, r);
    if (r.is_zero()) break;  // g not squarefree; the truncated chain counts roots of g/gcd
    ch.seq.push_back(-r);
  }
  return ch;
}

static int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) v++;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const RatPoly& p : seq) s.push_back(p.sign_at(x));
  return variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const RatPoly& p : seq) s.push_back(p.sign_at_pos_inf());
  return variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const RatPoly& p : seq) s.push_back(p.sign_at_neg_inf());
  return variations(s);
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_real() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int SturmChain::count_positive() const {
  return variations_at(Rat(0)) - variations_at_pos_inf();
}

// Power-of-two upper bound beyond every real root (Cauchy bound).
static Rat root_bound(const RatPoly& g) {
  Rat m(0);
  Rat invl = 1 / g.leading();
  for (int i = 0; i < g.degree(); i++) {
    Rat a = abs(g.coeff(i) * invl);
    if (a > m) m = a;
  }
  Rat b = m + 1;
  Rat p(1);
  while (p < b) p *= 2;
  return p;
}

void RootInterval::refine_once() {
  if (is_point()) return;
  Rat mid = (lo + hi) / 2;
  int sm = factor.sign_at(mid);
  if (sm == 0) {
    lo = hi = mid;
    return;
  }
  // Exactly one simple root inside, so the endpoint signs differ.
  if (factor.sign_at(lo) == sm)
    lo = mid;
  else
    hi = mid;
}

void RootInterval::refine_below_width(const Rat& w) {
  while (!is_point() && width() >= w) refine_once();
}

int IsolatedRoots::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

// Isolating intervals for the (simple) roots of a squarefree integer
// polynomial via Sturm bisection.
static void isolate_squarefree(const IntPoly& g, int multiplicity,
                               std::vector<RootInterval>& out) {
  if (g.degree() < 1) return;
  RatPoly gq(g);
  SturmChain ch = build_sturm(gq);
  Rat b = root_bound(gq);
  struct Item {
    Rat lo, hi;
    int count;
  };
  std::vector<Item> stack;
  int total = ch.count_in(-b, b);
  if (total > 0) stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1) {
      // One root in (lo, hi]; the endpoints are never roots: +-b is beyond
      // the root bound and every midpoint is checked before splitting.
      out.push_back({it.lo, it.hi, multiplicity, g});
      continue;
    }
    Rat mid = (it.lo + it.hi) / 2;
    if (gq.sign_at(mid) == 0) {
      out.push_back({mid, mid, multiplicity, g});
      // Perturb the split point so both halves have non-root endpoints.
      Rat w = (it.hi - it.lo);
      Rat eps = w / 4;
      Rat ml = mid - eps, mr = mid + eps;
      while (gq.sign_at(ml) == 0) ml = (it.lo + ml) / 2;
      while (gq.sign_at(mr) == 0) mr = (mr + it.hi) / 2;
      int cl = ch.count_in(it.lo, ml);
      int cr = ch.count_in(mr, it.hi);
      // Root(s) between ml and mr other than mid would be missed; narrow
      // until the gap holds only mid.
      while (cl + cr + 1 < it.count) {
        ml = (ml + mid) / 2;
        mr = (mid + mr) / 2;
        while (gq.sign_at(ml) == 0) ml = (ml + mid) / 2;
        while (gq.sign_at(mr) == 0) mr = (mid + mr) / 2;
        cl = ch.count_in(it.lo, ml);
        cr = ch.count_in(mr, it.hi);
      }
      if (cl > 0) stack.push_back({it.lo, ml, cl});
      if (cr > 0) stack.push_back({mr, it.hi, cr});
    } else {
      int cl = ch.count_in(it.lo, mid);
      int cr = it.count - cl;
      if (cl > 0) stack.push_back({it.lo, mid, cl});
      if (cr > 0) stack.push_back({mid, it.hi, cr});
    }
  }
}

IsolatedRoots isolate_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  IsolatedRoots res;
  if (f.degree() < 1) return res;
  auto parts = squarefree_decomposition(f);
  for (const auto& [factor, mult] : parts) isolate_squarefree(factor, mult, res.roots);
  // Roots of distinct squarefree factors are distinct; shrink intervals until
  // pairwise disjoint, then order them.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < res.roots.size(); i++)
      for (size_t j = i + 1; j < res.roots.size(); j++) {
        RootInterval &a = res.roots[i], &b = res.roots[j];
        bool overlap = a.lo < b.hi && b.lo < a.hi;
        if (a.is_point() && b.is_point()) overlap = false;
        if (a.is_point()) overlap = b.lo < a.lo && a.lo < b.hi;
        else if (b.is_point()) overlap = a.lo < b.lo && b.lo < a.hi;
        if (overlap) {
          a.refine_once();
          b.refine_once();
          changed = true;
        }
      }
  }
  std::sort(res.roots.begin(), res.roots.end(),
            [](const RootInterval& a, const RootInterval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  return res;
}

// All roots of h real and strictly positive, assuming h(0) != 0.
static bool all_roots_real_positive_nonvanishing(const IntPoly& h) {
  if (h.degree() < 1) return true;
  IntPoly g = squarefree_part(h);
  SturmChain ch = build_sturm(RatPoly(g));
  return ch.count_positive() == g.degree();
}

bool all_roots_real(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("all_roots_real: zero polynomial");
  if (f.degree() < 1) return true;
  IntPoly g = squarefree_part(f);
  SturmChain ch = build_sturm(RatPoly(g));
  return ch.count_real() == g.degree();
}

bool all_roots_real_nonneg(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("all_roots_real_nonneg: zero polynomial");
  if (f.degree() < 1) return true;
  int v = f.valuation_at_zero();
  return all_roots_real_positive_nonvanishing(f.shift_down(v));
}

bool all_roots_real_positive(const IntPoly& f, bool strict) {
  if (f.is_zero()) throw std::domain_error("all_roots_real_positive: zero polynomial");
  if (f.degree() < 1) return true;
  if (!strict) return all_roots_real_nonneg(f);
  if (sgn(f.coeff(0)) == 0) return false;  // zero is a root
  return all_roots_real_positive_nonvanishing(f);
}

bool all_roots_real_positive(const MonicIntPoly& f, bool strict) {
  return all_roots_real_positive(f.to_poly(), strict);
}

}  // namespace rootcensus
