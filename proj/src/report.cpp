#include "rootcensus/report.hpp"

#include <sstream>

#include "json.hpp"
#include "rootcensus/parallel.hpp"
#include "rootcensus/robinson.hpp"

namespace rootcensus {

std::string decimal_upper(const Rat& r) {
  return Interval::from_rat(r, 192).hi_str(15);
}

static Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// -1 certainly value < q, 1 certainly value >= q, 0 undecided at this width.
static int cmp_certified_ge(const CertifiedReal& v, const Rat& q) {
  if (v.exact) return *v.exact >= q ? 1 : -1;
  if (v.iv.certainly_ge(q)) return 1;
  if (mpfr_cmp_q(v.iv.hi(), q.get_mpq_t()) < 0) return -1;
  return 0;
}

static int cmp_certified_le(const CertifiedReal& v, const Rat& q) {
  if (v.exact) return *v.exact <= q ? 1 : -1;
  if (v.iv.certainly_le(q)) return 1;
  if (mpfr_cmp_q(v.iv.lo(), q.get_mpq_t()) > 0) return -1;
  return 0;
}

static std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

static std::string join_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (size_t i = 0; i < kv.size(); i++) {
    if (i) out += ";";
    out += kv[i].first;
    out += "=";
    out += kv[i].second;
  }
  return out;
}

std::string csv_header() {
  return "command,params,count,main_term,error_bound_approx,within_bound,elapsed_ms,extras";
}

std::string csv_row(const CensusReport& r) {
  std::ostringstream out;
  out << csv_escape(r.command) << ',' << csv_escape(join_kv(r.params)) << ',';
  if (r.count) out << r.count->get_str();
  out << ',';
  if (r.main_term) out << rat_str(*r.main_term);
  out << ',';
  if (r.error_bound) out << csv_escape(*r.error_bound);
  out << ',';
  if (r.within_bound) out << (*r.within_bound ? "true" : "false");
  out << ',';
  if (r.elapsed_ms) out << *r.elapsed_ms;
  out << ',' << csv_escape(join_kv(r.extras));
  return out.str();
}

std::string render(const std::vector<CensusReport>& rows, OutputFormat f) {
  if (f == OutputFormat::csv) {
    std::string out = csv_header();
    out += '\n';
    for (const auto& r : rows) {
      out += csv_row(r);
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["count"] = r.count ? nlohmann::ordered_json(r.count->get_str())
                         : nlohmann::ordered_json(nullptr);
    j["main_term"] = r.main_term ? nlohmann::ordered_json(rat_str(*r.main_term))
                                 : nlohmann::ordered_json(nullptr);
    j["error_bound_approx"] =
        r.error_bound ? nlohmann::ordered_json(*r.error_bound) : nlohmann::ordered_json(nullptr);
    j["within_bound"] =
        r.within_bound ? nlohmann::ordered_json(*r.within_bound) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] =
        r.elapsed_ms ? nlohmann::ordered_json(*r.elapsed_ms) : nlohmann::ordered_json(nullptr);
    j["extras"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.extras) j["extras"][k] = v;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

// |count - main| <= budget, all exact.
static void attach_exact_bracket(CensusReport& r, const Rat& main, const Rat& budget) {
  r.main_term = main;
  r.error_bound = decimal_upper(budget);
  Rat diff = Rat(*r.count) - main;
  if (sgn(diff) < 0) diff = -diff;
  r.within_bound = diff <= budget;
}

CensusReport census_cubic_report(const Int& a, const std::optional<RationalScaling>& s,
                                 bool nonneg, int workers) {
  CensusReport r;
  r.command = "census cubic";
  r.params.emplace_back("trace", a.get_str());
  RationalScaling sc = s ? *s : RationalScaling{Rat(1), Rat(1), Rat(1)};
  if (s) {
    r.params.emplace_back("alpha", rat_str(sc.alpha));
    r.params.emplace_back("beta", rat_str(sc.beta));
    r.params.emplace_back("gamma", rat_str(sc.gamma));
  }
  if (nonneg) r.params.emplace_back("nonneg", "true");
  bool strict = !nonneg;
  if (!s && strict) {
    Int b_max = floor_div(a * a, Int(3));
    r.count = parallel_reduce(Int(1), b_max, workers, Int(0),
                              [&a](const Int& lo, const Int& hi) {
                                return count_P3_plus_range(a, lo, hi);
                              });
  } else {
    r.count = count_P3_scaled(a, sc, strict);
  }
  MainTermError mt = main_term_and_error(a, sc, strict);
  attach_exact_bracket(r, mt.main, mt.budget);
  return r;
}

CensusReport census_robinson_report(int n, const Int& a) {
  CensusReport r;
  r.command = "census robinson";
  r.params.emplace_back("n", std::to_string(n));
  r.params.emplace_back("trace", a.get_str());
  r.count = count_positive_real_monic(n, a, true);
  return r;
}

CensusReport census_prefix3_report(int n, const Int& a) {
  CensusReport r;
  r.command = "census prefix3";
  r.params.emplace_back("n", std::to_string(n));
  r.params.emplace_back("trace", a.get_str());
  r.count = count_prefix3(n, a);
  RationalScaling sc{frac(3, n), frac(6, long(n) * (n - 1)), frac(6, long(n) * (n - 1) * (n - 2))};
  MainTermError mt = main_term_and_error(a, sc, false);
  attach_exact_bracket(r, mt.main, mt.budget);
  return r;
}

CensusReport attainable_report(int n, const Int& a) {
  CensusReport r;
  r.command = "attainable";
  r.params.emplace_back("n", std::to_string(n));
  r.params.emplace_back("trace", a.get_str());
  Int c = count_attainable(n, a);
  r.count = c;
  auto [phi, psi] = phi_psi_binomial(n);
  unsigned long e = static_cast<unsigned long>((n - 1) * (n + 2) / 2);
  Rat x = Rat(pow_int(a, e));
  Rat y = Rat(pow_int(a, e - 2));
  Rat main = phi * x;
  r.main_term = main;
  if (psi.exact) {
    r.error_bound = decimal_upper(*psi.exact * y);
  } else {
    r.error_bound = (psi.iv * Interval::from_rat(y, psi.iv.prec())).hi_str(15);
  }
  Rat diff = Rat(c) - main;
  if (sgn(diff) < 0) diff = -diff;
  int verdict = cmp_certified_ge(psi, diff / y);
  if (verdict != 0) r.within_bound = verdict > 0;
  return r;
}

CensusReport attainable_report(int n, const Int& a, const BSequence& bs,
                               const std::string& bseq_text) {
  CensusReport r;
  r.command = "attainable";
  r.params.emplace_back("n", std::to_string(n));
  r.params.emplace_back("trace", a.get_str());
  r.params.emplace_back("bseq", bseq_text);
  Int c = count_SB(a, bs);
  r.count = c;
  PhiPsi pp = phi_psi_general(bs);
  unsigned long e = static_cast<unsigned long>((n - 1) * (n + 2) / 2);
  Rat x = Rat(pow_int(a, e));
  Rat y = Rat(pow_int(a, e - 2));
  Interval xiv = Interval::from_rat(x, pp.phi.iv.prec());
  Interval yiv = Interval::from_rat(y, pp.psi.iv.prec());
  Interval main_iv = pp.phi.iv * xiv;
  Interval err_iv = pp.psi.iv * yiv;
  if (pp.phi.exact) {
    r.main_term = *pp.phi.exact * x;
  } else {
    r.extras.emplace_back("main_term_lower_approx", main_iv.lo_str(15));
    r.extras.emplace_back("main_term_upper_approx", main_iv.hi_str(15));
  }
  r.error_bound = pp.psi.exact ? decimal_upper(*pp.psi.exact * y) : err_iv.hi_str(15);
  Interval civ = Interval::from_int(c, main_iv.prec());
  Interval d1 = civ - main_iv;
  Interval d2 = main_iv - civ;
  if (d1.certainly_le(err_iv) && d2.certainly_le(err_iv)) {
    r.within_bound = true;
  } else if (err_iv.certainly_lt(d1) || err_iv.certainly_lt(d2)) {
    r.within_bound = false;
  }
  return r;
}

CensusReport disc_bounded_report(const Int& a, const Int& b, const Int& d) {
  CensusReport r;
  r.command = "disc bounded";
  r.params.emplace_back("a", a.get_str());
  r.params.emplace_back("b", b.get_str());
  r.params.emplace_back("d", d.get_str());
  Int c = count_P3_bounded_disc(a, b, d);
  r.count = c;
  W1Bounds w = w1_upper_bound(a, b, d);
  if (w.piecewise) r.extras.emplace_back("piecewise_upper_approx", w.piecewise->upper_str(15));
  r.extras.emplace_back("global_upper_approx", w.global.upper_str(15));
  r.extras.emplace_back("components", std::to_string(w.pieces));
  // The certified statement is count <= bound + components; decide it with
  // escalating precision.
  Rat target = Rat(c - w.pieces);
  int verdict = 0;
  for (mpfr_prec_t p : {mpfr_prec_t(128), mpfr_prec_t(256), mpfr_prec_t(512)}) {
    W1Bounds wp = w1_upper_bound(a, b, d, p);
    const CertifiedReal& applied = wp.piecewise ? *wp.piecewise : wp.global;
    verdict = cmp_certified_ge(applied, target);
    if (verdict != 0) break;
  }
  if (verdict != 0) r.within_bound = verdict > 0;
  return r;
}

CensusReport disc_squarefree_report(const Int& a) {
  CensusReport r;
  r.command = "disc squarefree";
  r.params.emplace_back("trace", a.get_str());
  SquarefreeCensus sc = count_P3_squarefree_plus(a);
  r.count = sc.count;
  if (sc.ratio.exact) {
    r.extras.emplace_back("ratio", rat_str(*sc.ratio.exact));
  } else {
    r.extras.emplace_back("ratio_lower_approx", sc.ratio.lower_str(15));
    r.extras.emplace_back("ratio_upper_approx", sc.ratio.upper_str(15));
  }
  return r;
}

CensusReport disc_almostprime_report(long h) {
  CensusReport r;
  r.command = "disc almostprime";
  r.params.emplace_back("h", std::to_string(h));
  r.count = count_almost_prime_disc_box(h);
  return r;
}

CensusReport disc_almostprime_report(long h, const Int& a, const Int& b) {
  CensusReport r;
  r.command = "disc almostprime";
  r.params.emplace_back("h", std::to_string(h));
  r.params.emplace_back("a", a.get_str());
  r.params.emplace_back("b", b.get_str());
  AlmostPrimeCount ap = count_almost_prime_disc(a, b, h);
  r.count = ap.count;
  r.extras.emplace_back("hypothesis_ok", ap.hypothesis_ok ? "true" : "false");
  return r;
}

CensusReport disc_squares_report(long h) {
  CensusReport r;
  r.command = "disc squares";
  r.params.emplace_back("h", std::to_string(h));
  Int c = count_square_pairs(h);
  r.count = c;
  if (h >= 2) {
    Interval ratio = Interval::from_int(c, 192) /
                     (Interval::from_long(h, 192) * log(Interval::from_long(h, 192)));
    r.extras.emplace_back("ratio_lower_approx", ratio.lo_str(15));
    r.extras.emplace_back("ratio_upper_approx", ratio.hi_str(15));
  }
  return r;
}

CensusReport sieve_quad_report(long a, long b, long c, long x, long y, long z) {
  CensusReport r;
  r.command = "sieve quad";
  r.params.emplace_back("a", std::to_string(a));
  r.params.emplace_back("b", std::to_string(b));
  r.params.emplace_back("c", std::to_string(c));
  r.params.emplace_back("x", std::to_string(x));
  r.params.emplace_back("y", std::to_string(y));
  r.params.emplace_back("z", std::to_string(z));
  QuadPoly f{Int(a), Int(b), Int(c)};
  SieveBracket sb = squarefree_sieve_bounds(f, x, y, z);
  r.count = sb.empirical;
  r.extras.emplace_back("lower_approx", sb.lower.lower_str(15));
  r.extras.emplace_back("upper_approx", sb.upper.upper_str(15));
  Rat emp = Rat(sb.empirical);
  int lo_ok = cmp_certified_le(sb.lower, emp);
  int hi_ok = cmp_certified_ge(sb.upper, emp);
  if (lo_ok != 0 && hi_ok != 0) r.within_bound = lo_ok > 0 && hi_ok > 0;
  return r;
}

std::vector<CensusReport> constants_reports(int n, long truncation) {
  std::vector<CensusReport> rows;
  auto [phi, psi] = phi_psi_binomial(n);

  CensusReport rphi;
  rphi.command = "constants";
  rphi.params.emplace_back("name", "phi");
  rphi.params.emplace_back("n", std::to_string(n));
  rphi.main_term = phi;
  rows.push_back(std::move(rphi));

  CensusReport rpsi;
  rpsi.command = "constants";
  rpsi.params.emplace_back("name", "psi");
  rpsi.params.emplace_back("n", std::to_string(n));
  if (psi.exact) {
    rpsi.main_term = *psi.exact;
  } else {
    rpsi.extras.emplace_back("lower_approx", psi.lower_str(15));
    rpsi.extras.emplace_back("upper_approx", psi.upper_str(15));
  }
  rows.push_back(std::move(rpsi));

  CensusReport rw;
  rw.command = "constants";
  rw.params.emplace_back("name", "disc_bound_coefficient");
  Interval wc = Interval::from_long(2, 192) / sqrt(Interval::from_long(27, 192));
  rw.extras.emplace_back("lower_approx", wc.lo_str(15));
  rw.extras.emplace_back("upper_approx", wc.hi_str(15));
  rows.push_back(std::move(rw));

  CensusReport rt;
  rt.command = "constants";
  rt.params.emplace_back("name", "tao_constant");
  Interval tc = Interval::from_long(160, 192) * exp(Interval::from_long(7, 192));
  rt.extras.emplace_back("lower_approx", tc.lo_str(15));
  rt.extras.emplace_back("upper_approx", tc.hi_str(15));
  rows.push_back(std::move(rt));

  CensusReport rf;
  rf.command = "constants";
  rf.params.emplace_back("name", "feller_tornier_product");
  rf.params.emplace_back("truncation", std::to_string(truncation));
  CertifiedReal ft = feller_tornier(truncation);
  rf.extras.emplace_back("lower_approx", ft.lower_str(15));
  rf.extras.emplace_back("upper_approx", ft.upper_str(15));
  rows.push_back(std::move(rf));

  CensusReport rc;
  rc.command = "constants";
  rc.params.emplace_back("name", "feller_tornier");
  rc.params.emplace_back("truncation", std::to_string(truncation));
  Interval full = (Interval::from_long(1, ft.iv.prec()) + ft.iv) /
                  Interval::from_long(2, ft.iv.prec());
  rc.extras.emplace_back("lower_approx", full.lo_str(15));
  rc.extras.emplace_back("upper_approx", full.hi_str(15));
  rows.push_back(std::move(rc));

  return rows;
}

std::vector<CensusReport> determinism_sample_rows(int workers) {
  std::vector<CensusReport> rows;
  rows.push_back(census_cubic_report(Int(30), std::nullopt, false, workers));
  rows.push_back(census_cubic_report(
      Int(12), RationalScaling{frac(1, 2), frac(1, 3), Rat(2)}, false, workers));
  rows.push_back(census_cubic_report(Int(10), std::nullopt, true, workers));
  rows.push_back(census_robinson_report(4, Int(8)));
  rows.push_back(census_prefix3_report(4, Int(16)));
  rows.push_back(attainable_report(3, Int(20)));
  rows.push_back(attainable_report(3, Int(12), BSequence::from_rats(3, {Rat(2), frac(1, 2)}),
                                   "2,1/2"));
  rows.push_back(disc_bounded_report(Int(6), Int(5), Int(49)));
  rows.push_back(disc_squarefree_report(Int(20)));
  rows.push_back(disc_almostprime_report(20));
  rows.push_back(disc_almostprime_report(50, Int(0), Int(-1)));
  rows.push_back(disc_squares_report(100));
  rows.push_back(sieve_quad_report(1, 0, -1, 0, 2000, 7));
  for (auto& c : constants_reports(3, 500)) rows.push_back(std::move(c));
  return rows;
}

}  // namespace rootcensus
