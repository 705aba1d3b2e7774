// Command-line front end: census tables, certified bound comparisons, and
// the self-verification suite, as CSV or JSON on standard output.
//
// Exit codes: 0 on success, 1 on usage errors and refusals, 2 when --check
// is given and a reported bound is violated (or a verification criterion
// fails).  Without --check a failed bound still shows up in the rows; the
// exit code only escalates when the caller asked for it.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rootcensus/maclaurin.hpp"
#include "rootcensus/numeric.hpp"
#include "rootcensus/report.hpp"
#include "rootcensus/verify.hpp"

namespace {

using rootcensus::CensusReport;
using rootcensus::Int;
using rootcensus::Rat;

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rootcensus::parse_rational(item));
  return out;
}

CensusReport verify_row(const rootcensus::CriterionResult& c, const std::string& suite) {
  CensusReport r;
  r.command = "verify";
  r.params = {{"suite", suite},
              {"id", std::to_string(c.id)},
              {"criterion", c.name}};
  r.within_bound = c.pass;
  r.extras = {{"detail", c.detail}};
  return r;
}

long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact censuses of monic integer polynomials with all-real roots, "
      "certified bound comparisons, and a self-verification suite."};
  app.require_subcommand(1);
  // --h is a real option below (disc almostprime --h H), so help keeps only
  // its long spelling.
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format = "csv";
  int workers = 1;
  std::uint64_t seed = 20260822;
  bool timing = false;
  bool check = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", workers, "Worker threads for partitionable loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the randomized verification checks");
  app.add_flag("--timing", timing,
               "Fill the elapsed_ms column (off by default so output is "
               "byte-identical across runs)");
  app.add_flag("--check", check,
               "Exit 2 if any reported bound is violated or any verification "
               "criterion fails");

  // census
  auto* census = app.add_subcommand("census", "Closed-form root censuses");
  census->require_subcommand(1);
  census->fallthrough();

  auto* cubic = census->add_subcommand(
      "cubic", "Monic cubics with all roots real and positive, counted by trace");
  cubic->fallthrough();
  long cubic_trace = 0;
  std::vector<std::string> scaled_raw;
  bool nonneg = false;
  cubic->add_option("--trace", cubic_trace, "Trace A")->required();
  cubic->add_option("--scaled", scaled_raw,
                    "Rational scalings alpha beta gamma of the three coefficient axes")
      ->expected(3);
  cubic->add_flag("--nonneg", nonneg, "Count roots >= 0 instead of > 0");

  auto* robinson = census->add_subcommand(
      "robinson", "Monic degree-n polynomials with all roots real and positive");
  robinson->fallthrough();
  int rob_n = 0;
  long rob_trace = 0;
  robinson->add_option("--n", rob_n, "Degree")->required();
  robinson->add_option("--trace", rob_trace, "Trace A")->required();

  auto* prefix3 = census->add_subcommand(
      "prefix3", "Three-coefficient prefixes attainable by degree-n real-rooted "
                 "polynomials with nonnegative roots");
  prefix3->fallthrough();
  int pre_n = 0;
  long pre_trace = 0;
  prefix3->add_option("--n", pre_n, "Degree (>= 4)")->required();
  prefix3->add_option("--trace", pre_trace, "Trace A")->required();

  // attainable
  auto* attainable = app.add_subcommand(
      "attainable", "Coefficient tuples within the power-mean growth chain");
  attainable->fallthrough();
  int att_n = 0;
  long att_trace = 0;
  std::string bseq_text;
  attainable->add_option("--n", att_n, "Degree")->required();
  attainable->add_option("--trace", att_trace, "Trace A")->required();
  attainable->add_option("--bseq", bseq_text,
                         "Comma-separated rational growth bounds B_1,...,B_{n-1} "
                         "(default: the binomial chain)");

  // disc
  auto* disc = app.add_subcommand("disc", "Discriminant censuses");
  disc->require_subcommand(1);
  disc->fallthrough();

  auto* bounded = disc->add_subcommand(
      "bounded", "Integers C with 0 <= disc(X^3 - AX^2 + BX - C) <= D");
  bounded->fallthrough();
  long bd_a = 0, bd_b = 0, bd_d = 0;
  bounded->add_option("--a", bd_a, "Coefficient A")->required();
  bounded->add_option("--b", bd_b, "Coefficient B")->required();
  bounded->add_option("--d", bd_d, "Discriminant ceiling D")->required();

  auto* squarefree = disc->add_subcommand(
      "squarefree", "Strict positive-root cubic census members with square-free "
                    "discriminant");
  squarefree->fallthrough();
  long sf_trace = 0;
  squarefree->add_option("--trace", sf_trace, "Trace A")->required();

  auto* almostprime = disc->add_subcommand(
      "almostprime", "Cubics whose discriminant has at most two distinct prime "
                     "factors, over C in [-H, H] (or all of [-H, H]^3)");
  almostprime->fallthrough();
  long ap_h = 0, ap_a = 0, ap_b = 0;
  almostprime->add_option("--h", ap_h, "Box half-width H")->required();
  auto* ap_a_opt = almostprime->add_option("--a", ap_a, "Coefficient A");
  auto* ap_b_opt = almostprime->add_option("--b", ap_b, "Coefficient B");
  ap_a_opt->needs(ap_b_opt);
  ap_b_opt->needs(ap_a_opt);

  auto* squares = disc->add_subcommand(
      "squares", "Pairs (A, B) in [-H, H]^2 with A^2 - 3B a perfect square");
  squares->fallthrough();
  long sq_h = 0;
  squares->add_option("--h", sq_h, "Box half-width H")->required();

  // sieve
  auto* sieve = app.add_subcommand("sieve", "Square-free sieve brackets");
  sieve->require_subcommand(1);
  sieve->fallthrough();

  auto* quad = sieve->add_subcommand(
      "quad", "Certified bracket around #{x < n <= y : An^2 + Bn + C square-free}");
  quad->fallthrough();
  long sv_a = 0, sv_b = 0, sv_c = 0, sv_x = 0, sv_y = 0, sv_z = 0;
  quad->add_option("--a", sv_a, "Leading coefficient")->required();
  quad->add_option("--b", sv_b, "Linear coefficient")->required();
  quad->add_option("--c", sv_c, "Constant coefficient")->required();
  quad->add_option("--x", sv_x, "Range start (exclusive)")->required();
  quad->add_option("--y", sv_y, "Range end (inclusive)")->required();
  quad->add_option("--z", sv_z, "Sieve level")->required();

  // constants
  auto* constants = app.add_subcommand(
      "constants", "Census constants and certified enclosures");
  constants->fallthrough();
  int ct_n = 3;
  long ct_trunc = 10000;
  constants->add_option("--n", ct_n, "Degree for the chain constants (default 3)");
  constants->add_option("--truncation", ct_trunc,
                        "Prime cutoff for the density product (default 10000)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the verification criteria and report one row per criterion");
  verify->fallthrough();
  std::string suite;
  verify->add_option("--suite", suite, "cubic, maclaurin, disc, or all")
      ->required()
      ->check(CLI::IsMember({"cubic", "maclaurin", "disc", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  rootcensus::OutputFormat fmt = format == "json" ? rootcensus::OutputFormat::json
                                                  : rootcensus::OutputFormat::csv;
  std::vector<CensusReport> rows;
  bool any_criterion_failed = false;

  try {
    auto t0 = std::chrono::steady_clock::now();
    if (cubic->parsed()) {
      if (cubic_trace > 10000) {
        std::cerr << "census cubic: refusing --trace " << cubic_trace
                  << ": the census loop visits about A^2/3 coefficient windows, "
                     "each with an integer square root, and above A = 10000 that "
                     "stops being interactive. Rerun with --trace <= 10000.\n";
        return 1;
      }
      std::optional<rootcensus::RationalScaling> sc;
      if (!scaled_raw.empty()) {
        rootcensus::RationalScaling s{rootcensus::parse_rational(scaled_raw[0]),
                                      rootcensus::parse_rational(scaled_raw[1]),
                                      rootcensus::parse_rational(scaled_raw[2])};
        if (sgn(s.alpha) <= 0 || sgn(s.beta) <= 0 || sgn(s.gamma) <= 0) {
          std::cerr << "census cubic: --scaled values must be positive\n";
          return 1;
        }
        sc = s;
      }
      rows.push_back(rootcensus::census_cubic_report(Int(cubic_trace), sc, nonneg, workers));
    } else if (robinson->parsed()) {
      rows.push_back(rootcensus::census_robinson_report(rob_n, Int(rob_trace)));
    } else if (prefix3->parsed()) {
      rows.push_back(rootcensus::census_prefix3_report(pre_n, Int(pre_trace)));
    } else if (attainable->parsed()) {
      if (bseq_text.empty()) {
        rows.push_back(rootcensus::attainable_report(att_n, Int(att_trace)));
      } else {
        rootcensus::BSequence bs =
            rootcensus::BSequence::from_rats(att_n, parse_rat_list(bseq_text));
        rows.push_back(rootcensus::attainable_report(att_n, Int(att_trace), bs, bseq_text));
      }
    } else if (bounded->parsed()) {
      rows.push_back(rootcensus::disc_bounded_report(Int(bd_a), Int(bd_b), Int(bd_d)));
    } else if (squarefree->parsed()) {
      rows.push_back(rootcensus::disc_squarefree_report(Int(sf_trace)));
    } else if (almostprime->parsed()) {
      if (*ap_a_opt)
        rows.push_back(rootcensus::disc_almostprime_report(ap_h, Int(ap_a), Int(ap_b)));
      else
        rows.push_back(rootcensus::disc_almostprime_report(ap_h));
    } else if (squares->parsed()) {
      rows.push_back(rootcensus::disc_squares_report(sq_h));
    } else if (quad->parsed()) {
      rows.push_back(rootcensus::sieve_quad_report(sv_a, sv_b, sv_c, sv_x, sv_y, sv_z));
    } else if (constants->parsed()) {
      rows = rootcensus::constants_reports(ct_n, ct_trunc);
    } else if (verify->parsed()) {
      for (const rootcensus::CriterionResult& c : rootcensus::run_suite(suite, seed)) {
        rows.push_back(verify_row(c, suite));
        if (timing) rows.back().elapsed_ms = c.elapsed_ms;
        if (!c.pass) any_criterion_failed = true;
      }
    }
    if (timing && !verify->parsed()) {
      long total = ms_since(t0);
      for (CensusReport& r : rows) r.elapsed_ms = total;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << rootcensus::render(rows, fmt);

  if (check) {
    if (any_criterion_failed) return 2;
    for (const CensusReport& r : rows)
      if (r.within_bound && !*r.within_bound) return 2;
  }
  return 0;
}
