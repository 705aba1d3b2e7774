#include "rootcensus/robinson.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/roots.hpp"

namespace rootcensus {

DerivativeChainLevel::DerivativeChainLevel(int n_, int k_, std::vector<Int> prefix_)
    : n(n_), k(k_), prefix(std::move(prefix_)) {
  if (n < 2 || k < 2 || k > n) throw std::domain_error("DerivativeChainLevel: need 2 <= k <= n");
  if (static_cast<int>(prefix.size()) != k - 1)
    throw std::domain_error("DerivativeChainLevel: prefix must hold A_1..A_(k-1)");
}

static Rat chain_coeff(int top, int n, int j, const Int& aj) {
  Rat r(binomial(top, j), binomial(n, j));
  r.canonicalize();
  r *= aj;
  if (j % 2 == 1) r = -r;
  return r;
}

RatPoly DerivativeChainLevel::constant_free_part() const {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = 1;  // j = 0
  for (int j = 1; j <= k - 1; ++j) c[k - j] = chain_coeff(k, n, j, prefix[j - 1]);
  return RatPoly(std::move(c));
}

RatPoly DerivativeChainLevel::previous_level() const {
  std::vector<Rat> c(k, Rat(0));
  c[k - 1] = 1;
  for (int j = 1; j <= k - 1; ++j) c[k - 1 - j] = chain_coeff(k - 1, n, j, prefix[j - 1]);
  return RatPoly(std::move(c));
}

namespace {

// Exact rational interval evaluation (Horner); valid enclosure of g over
// [xlo, xhi].
std::pair<Rat, Rat> eval_box(const RatPoly& g, const Rat& xlo, const Rat& xhi) {
  int d = g.degree();
  Rat lo = g.coeff(d), hi = lo;
  for (int i = d - 1; i >= 0; --i) {
    Rat p1 = lo * xlo, p2 = lo * xhi, p3 = hi * xlo, p4 = hi * xhi;
    lo = std::min(std::min(p1, p2), std::min(p3, p4)) + g.coeff(i);
    hi = std::max(std::max(p1, p2), std::max(p3, p4)) + g.coeff(i);
  }
  return {lo, hi};
}

struct Contributor {
  RootInterval root;
  Rat lo, hi;  // current enclosure of value(root)

  void eval(const RatPoly& g) {
    if (root.is_point()) {
      lo = hi = g.eval(root.lo);
    } else {
      std::tie(lo, hi) = eval_box(g, root.lo, root.hi);
    }
  }
};

struct Endpoint {
  bool exact = false;
  Rat lo, hi;  // enclosure; exact => lo == hi == value
};

// Does the (unique) root of c.root.factor inside c.root equal a root of
// g - m, i.e. is the contributed value exactly m?
bool value_equals(const Contributor& c, const RatPoly& g, const Rat& m) {
  if (c.root.is_point()) return g.eval(c.root.lo) == m;
  RatPoly diff = g - RatPoly({m});
  if (diff.is_zero()) return true;
  RatPoly h = gcd_monic(RatPoly(c.root.factor), diff);
  if (h.degree() < 1) return false;
  return build_sturm(h).count_in(c.root.lo, c.root.hi) == 1;
}

// Extremum (max if is_max, else min) of the contributed values of g, resolved
// until the integer rounding (ceil for is_max endpoints used as lower bounds,
// floor otherwise -- pass want_ceil) of the enclosure is unambiguous or the
// value is certified equal to an integer.
Endpoint resolve_extremum(std::vector<Contributor> contribs, const RatPoly& g, bool is_max,
                          bool want_ceil) {
  constexpr int kMaxRounds = 90;
  for (auto& c : contribs) c.eval(g);
  for (int round = 0; round < kMaxRounds; ++round) {
    Rat alo = contribs[0].lo, ahi = contribs[0].hi;
    for (const auto& c : contribs) {
      if (is_max) {
        alo = std::max(alo, c.lo);
        ahi = std::max(ahi, c.hi);
      } else {
        alo = std::min(alo, c.lo);
        ahi = std::min(ahi, c.hi);
      }
    }
    if (alo == ahi) return {true, alo, ahi};
    Int rlo = want_ceil ? rat_ceil(alo) : rat_floor(alo);
    Int rhi = want_ceil ? rat_ceil(ahi) : rat_floor(ahi);
    if (rlo == rhi) return {false, alo, ahi};
    // rounding ambiguous: some integer m with alo <= m <= ahi (for ceil the
    // ambiguity window is (alo, ahi]); certify or separate
    Int mlo = rat_ceil(alo), mhi = rat_floor(ahi);
    if (mlo == mhi) {
      Rat m(mlo);
      bool beyond = false;  // some value certainly past m in the extremal direction
      for (const auto& c : contribs) beyond |= is_max ? (c.lo > m) : (c.hi < m);
      if (!beyond) {
        bool any_eq = false, all_within = true;
        for (const auto& c : contribs) {
          bool touches = c.lo <= m && m <= c.hi;
          if (touches && value_equals(c, g, m)) {
            any_eq = true;
          } else if (is_max ? (c.hi > m) : (c.lo < m)) {
            all_within = false;  // still straddles m without equality
          }
        }
        if (any_eq && all_within) return {true, m, m};
      }
    }
    for (auto& c : contribs) {
      if (!c.root.is_point()) {
        c.root.refine_once();
        c.root.refine_once();
        c.eval(g);
      }
    }
  }
  throw std::runtime_error("admissible_constant_interval: endpoint resolution did not converge");
}

}  // namespace

std::optional<RatInterval> admissible_constant_interval(const DerivativeChainLevel& level) {
  RatPoly prev = level.previous_level();
  IntPoly prev_int = prev.clear_denominators();
  if (!all_roots_real_nonneg(prev_int)) return std::nullopt;

  IsolatedRoots iso = isolate_real_roots(prev_int);
  // decreasing order; assign positions 1..k-1 with multiplicity
  std::vector<Contributor> odd_slots, even_slots;
  int pos = 1;
  for (auto it = iso.roots.rbegin(); it != iso.roots.rend(); ++it) {
    bool occupies_odd = false, occupies_even = false;
    for (int m = 0; m < it->multiplicity; ++m, ++pos) (pos % 2 ? occupies_odd : occupies_even) = true;
    if (occupies_odd) odd_slots.push_back({*it, Rat(0), Rat(0)});
    if (occupies_even) even_slots.push_back({*it, Rat(0), Rat(0)});
  }

  // value polynomial in A_k coordinates: A_k = (-1)^(k+1) C(n,k) c with c the
  // constant-term window of the lemma, so evaluate s*C*P directly
  Rat scale(binomial(level.n, level.k));
  if (level.k % 2 == 0) scale = -scale;
  RatPoly g = scale * level.constant_free_part();

  // k odd: A-lower from odd positions (max), A-upper from even (min);
  // k even: the scale flip swaps the roles
  std::vector<Contributor>& lower_set = (level.k % 2) ? odd_slots : even_slots;
  std::vector<Contributor>& upper_set = (level.k % 2) ? even_slots : odd_slots;

  RatInterval out;
  Endpoint elo, ehi;
  bool have_lo = !lower_set.empty(), have_hi = !upper_set.empty();
  if (have_lo) {
    elo = resolve_extremum(lower_set, g, /*is_max=*/true, /*want_ceil=*/true);
    out.lo = elo.lo;  // outward: lower enclosure end
  }
  if (have_hi) {
    ehi = resolve_extremum(upper_set, g, /*is_max=*/false, /*want_ceil=*/false);
    out.hi = ehi.hi;  // outward: upper enclosure end
  }
  if (have_lo && have_hi) {
    if (elo.exact && ehi.exact) {
      if (elo.lo > ehi.lo) return std::nullopt;
    } else if (elo.lo > ehi.hi) {
      return std::nullopt;  // enclosures certainly in the wrong order
    }
  }
  return out;
}

namespace {

void dfs_levels(int n, bool strict, std::vector<Int>& prefix,
                const std::function<void(const MonicIntPoly&)>& emit) {
  int k = static_cast<int>(prefix.size()) + 1;
  DerivativeChainLevel level(n, k, prefix);
  auto window = admissible_constant_interval(level);
  if (!window) return;
  Int lo = strict ? 1 : 0;  // sign condition (-1)^k c < 0 resp. <= 0
  if (window->lo) lo = std::max(lo, rat_ceil(*window->lo));
  if (!window->hi) throw std::logic_error("unbounded admissible window above");
  Int hi = rat_floor(*window->hi);
  for (Int ak = lo; ak <= hi; ++ak) {
    prefix.push_back(ak);
    if (k == n) {
      MonicIntPoly cand(n, prefix);
      if (all_roots_real_positive(cand, strict)) emit(cand);
    } else {
      DerivativeChainLevel next(n, k + 1, prefix);
      if (all_roots_real_nonneg(next.previous_level().clear_denominators()))
        dfs_levels(n, strict, prefix, emit);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MonicIntPoly> enumerate_positive_real_monic(int n, const Int& a, bool strict) {
  if (n < 1) throw std::domain_error("enumerate_positive_real_monic: degree must be >= 1");
  std::vector<MonicIntPoly> out;
  if (sgn(a) < 0) return out;
  // strict: the root product is a positive integer, so AM-GM gives (A/n)^n >= 1
  if (strict && a < n) return out;
  if (n == 1) {
    if (!strict || sgn(a) > 0) out.emplace_back(1, std::vector<Int>{a});
    return out;
  }
  std::vector<Int> prefix{a};
  dfs_levels(n, strict, prefix, [&](const MonicIntPoly& p) { out.push_back(p); });
  return out;
}

Int count_positive_real_monic(int n, const Int& a, bool strict) {
  if (n < 1) throw std::domain_error("count_positive_real_monic: degree must be >= 1");
  if (sgn(a) < 0) return Int(0);
  if (strict && a < n) return Int(0);
  if (n == 1) return Int(!strict || sgn(a) > 0 ? 1 : 0);
  Int total(0);
  std::vector<Int> prefix{a};
  dfs_levels(n, strict, prefix, [&](const MonicIntPoly&) { total += 1; });
  return total;
}

Int count_prefix3(int n, const Int& a) {
  if (n < 4) throw std::domain_error("count_prefix3: degree must be >= 4");
  Int nn(n);
  auto frac = [](const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  RationalScaling s{frac(Int(3), nn), frac(Int(6), nn * (nn - 1)),
                    frac(Int(6), nn * (nn - 1) * (nn - 2))};
  return count_P3_scaled(a, s, /*strict=*/false);
}

}  // namespace rootcensus
