#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/robinson.hpp"
#include "rootcensus/roots.hpp"

using namespace rootcensus;

namespace {

Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Independent oracle: scan the full Maclaurin box A_k <= C(n,k)(A/n)^k with
// the exact root filter, no interlacing involved.
std::vector<MonicIntPoly> brute_box(int n, long a, bool strict) {
  std::vector<MonicIntPoly> out;
  Int A(a);
  std::vector<Int> coeffs{A};
  Int lo = strict ? 1 : 0;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      MonicIntPoly cand(n, coeffs);
      if (all_roots_real_positive(cand, strict)) out.push_back(cand);
      return;
    }
    Rat cap = Rat(binomial(n, k)) * pow_rat(frac(a, n), k);
    Int hi = rat_floor(cap) + 1;
    for (Int v = lo; v <= hi; ++v) {
      coeffs.push_back(v);
      rec(k + 1);
      coeffs.pop_back();
    }
  };
  rec(2);
  return out;
}

// Scaled-cubic brute for the three-coefficient prefix of a degree-n chain.
Int brute_prefix3(int n, long a) {
  Rat al = frac(3, n), be = frac(6, n * (n - 1)), ga = frac(6, n * (n - 1) * (n - 2));
  Rat aa = al * a;
  Int bmax = rat_floor(Rat(aa * aa / (3 * be))) + 1;
  Int cmax = rat_floor(Rat(aa * aa * aa / (27 * ga))) + 2;
  Int total(0);
  for (Int b(0); b <= bmax; ++b)
    for (Int c(0); c <= cmax; ++c) {
      RatPoly f({Rat(-ga * c), Rat(be * b), Rat(-aa), Rat(1)});
      if (all_roots_real_positive(f.clear_denominators(), false)) total += 1;
    }
  return total;
}

}  // namespace

TEST_CASE("derivative chain structure") {
  std::vector<std::vector<Int>> prefixes = {
      {Int(6)}, {Int(6), Int(9)}, {Int(5), Int(7), Int(2)}, {Int(9), Int(20), Int(11), Int(3)}};
  for (const auto& pre : prefixes) {
    int k = static_cast<int>(pre.size()) + 1;
    for (int n = k; n <= k + 2; ++n) {
      DerivativeChainLevel lvl(n, k, pre);
      RatPoly p = lvl.constant_free_part();
      CHECK(p.degree() == k);
      CHECK(p.leading() == 1);
      CHECK(p.coeff(0) == 0);
      // P_k' = k P_(k-1)
      RatPoly expect = Rat(k) * lvl.previous_level();
      CHECK(p.derivative() == expect);
    }
  }
  CHECK_THROWS_AS(DerivativeChainLevel(3, 4, {Int(1), Int(1), Int(1)}), std::domain_error);
  CHECK_THROWS_AS(DerivativeChainLevel(3, 3, {Int(1)}), std::domain_error);
}

TEST_CASE("admissible windows with rational critical points") {
  auto w69 = admissible_constant_interval(DerivativeChainLevel(3, 3, {Int(6), Int(9)}));
  REQUIRE(w69.has_value());
  REQUIRE(w69->lo.has_value());
  REQUIRE(w69->hi.has_value());
  CHECK(*w69->lo == 0);
  CHECK(*w69->hi == 4);

  auto w33 = admissible_constant_interval(DerivativeChainLevel(3, 3, {Int(3), Int(3)}));
  REQUIRE(w33.has_value());
  CHECK(*w33->lo == 1);
  CHECK(*w33->hi == 1);

  // level 2 has no lower critical position: only the cap A_2 <= (n-1)A^2/(2n)
  auto w2 = admissible_constant_interval(DerivativeChainLevel(3, 2, {Int(6)}));
  REQUIRE(w2.has_value());
  CHECK(!w2->lo.has_value());
  CHECK(*w2->hi == 12);

  // dead end: previous level has complex roots
  CHECK(!admissible_constant_interval(DerivativeChainLevel(3, 3, {Int(6), Int(13)})).has_value());
}

TEST_CASE("admissible window with irrational critical points") {
  // prefix (6,1): critical points 2 +- sqrt(11/3), window ~ [-28.04, 0.0423]
  auto w = admissible_constant_interval(DerivativeChainLevel(3, 3, {Int(6), Int(1)}));
  REQUIRE(w.has_value());
  CHECK(rat_ceil(*w->lo) == -28);
  CHECK(rat_floor(*w->hi) == 0);
  CHECK(*w->lo <= frac(-28, 1));
  CHECK(*w->hi >= 0);
  // superset of the nonnegative-root members
  for (long m = -40; m <= 10; ++m) {
    if (all_roots_real_nonneg(MonicIntPoly(3, {Int(6), Int(1), Int(m)}).to_poly())) {
      CHECK(Rat(m) >= *w->lo);
      CHECK(Rat(m) <= *w->hi);
    }
  }
}

TEST_CASE("window with sign condition characterizes strict membership") {
  // at distinct strictly positive critical roots the interval is exact
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; 3 * b <= a * a; ++b) {
      DerivativeChainLevel lvl(3, 3, {Int(a), Int(b)});
      IntPoly prev = lvl.previous_level().clear_denominators();
      if (!all_roots_real_positive(prev, true)) continue;
      if (discriminant(prev) == 0) continue;
      auto w = admissible_constant_interval(lvl);
      REQUIRE(w.has_value());
      Int wlo = rat_ceil(*w->lo), whi = rat_floor(*w->hi);
      for (Int m = wlo - 3; m <= whi + 3; ++m) {
        bool in = wlo <= m && m <= whi && m >= 1;
        bool strict_member = all_roots_real_positive(MonicIntPoly(3, {Int(a), Int(b), m}), true);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(in == strict_member);
      }
    }
}

TEST_CASE("enumeration matches the exact-filter box scan") {
  for (int n = 2; n <= 4; ++n)
    for (long a = 0; a <= 8; ++a)
      for (bool strict : {true, false}) {
        auto got = enumerate_positive_real_monic(n, Int(a), strict);
        auto want = brute_box(n, a, strict);
        std::sort(want.begin(), want.end());
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(strict);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got == want);
        CHECK(count_positive_real_monic(n, Int(a), strict) == Int(static_cast<long>(got.size())));
      }
}

TEST_CASE("enumeration examples") {
  auto e33 = enumerate_positive_real_monic(3, Int(3), true);
  REQUIRE(e33.size() == 1);
  CHECK(e33[0] == MonicIntPoly(3, {Int(3), Int(3), Int(1)}));

  auto e44 = enumerate_positive_real_monic(4, Int(4), true);
  REQUIRE(e44.size() == 1);
  CHECK(e44[0] == MonicIntPoly(4, {Int(4), Int(6), Int(4), Int(1)}));

  CHECK(count_positive_real_monic(2, Int(3), true) == 2);
  CHECK(count_positive_real_monic(3, Int(6), true) == 16);
  for (int n = 2; n <= 6; ++n) CHECK(count_positive_real_monic(n, Int(n), true) == 1);

  // degree 1 and trace 0 edges
  auto e1 = enumerate_positive_real_monic(1, Int(5), true);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0] == MonicIntPoly(1, {Int(5)}));
  CHECK(enumerate_positive_real_monic(3, Int(0), true).empty());
  CHECK(enumerate_positive_real_monic(2, Int(1), true).empty());  // A < n
  auto z3 = enumerate_positive_real_monic(3, Int(0), false);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0] == MonicIntPoly(3, {Int(0), Int(0), Int(0)}));
}

TEST_CASE("counts agree with the cubic census") {
  for (long a = 0; a <= 25; ++a)
    CHECK(count_positive_real_monic(3, Int(a), true) == count_P3_plus(Int(a)));
  for (long a = 0; a <= 16; ++a)
    CHECK(count_positive_real_monic(3, Int(a), false) == count_P3_zeroplus(Int(a)));
}

TEST_CASE("three-coefficient prefix counts") {
  CHECK_THROWS_AS(count_prefix3(3, Int(5)), std::domain_error);
  CHECK(count_prefix3(5, Int(1)) == 1);
  CHECK(count_prefix3(4, Int(4)) == 8);
  for (long a = 0; a <= 8; ++a) {
    CAPTURE(a);
    CHECK(count_prefix3(4, Int(a)) == brute_prefix3(4, a));
  }
  for (long a = 0; a <= 6; ++a) {
    CAPTURE(a);
    CHECK(count_prefix3(5, Int(a)) == brute_prefix3(5, a));
  }
}

TEST_CASE("prefix-count main term") {
  // mechanical main term alpha^5 A^5/(480 beta gamma) with the chain scaling;
  // the relaxed budget 9/2 A^3 + 3/2 n A^2 + 3A dominates the mechanical one
  RationalScaling s{frac(3, 4), frac(1, 2), frac(1, 4)};
  Int A(40);
  MainTermError mt = main_term_and_error(A, s, false);
  Rat count(count_prefix3(4, A));
  Rat diff = count - mt.main;
  if (sgn(diff) < 0) diff = -diff;
  CHECK(diff <= mt.budget);
  Rat relaxed = frac(9, 2) * Rat(pow_int(A, 3)) + frac(3 * 4, 2) * Rat(A * A) + 3 * Rat(A);
  CHECK(mt.budget <= relaxed);
  CHECK(diff <= relaxed);
  // a main term three times larger (a plausible misreading) misses by far
  Rat wrong = 3 * mt.main;
  Rat wdiff = count - wrong;
  if (sgn(wdiff) < 0) wdiff = -wdiff;
  CHECK(wdiff > relaxed);
}
