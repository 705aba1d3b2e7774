#ifndef ROOTCENSUS_REPORT_HPP
#define ROOTCENSUS_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootcensus/cubic_census.hpp"
#include "rootcensus/disc_arith.hpp"
#include "rootcensus/maclaurin.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

// One output row.  params and extras keep insertion order so rendering is
// reproducible; absent optional fields render as empty cells (CSV) or are
// omitted (JSON).  Rationals are written as "p/q"; the only decimal columns
// are the ones whose name carries an _approx suffix, and those always hold a
// directed-rounding endpoint, never a midpoint.
struct CensusReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<Int> count;
  std::optional<Rat> main_term;
  std::optional<std::string> error_bound;  // decimal string, upper end
  std::optional<bool> within_bound;
  std::optional<long> elapsed_ms;
  std::vector<std::pair<std::string, std::string>> extras;
};

enum class OutputFormat { csv, json };

// Decimal string >= r, 15 significant digits, directed rounding.
std::string decimal_upper(const Rat& r);

std::string csv_header();
std::string csv_row(const CensusReport& r);
// Header plus one line per row (CSV) or a JSON array; newline terminated.
std::string render(const std::vector<CensusReport>& rows, OutputFormat f);

// Row builders shared by the command-line tool and the worker-count
// determinism check.  Only the plain strict cubic census actually fans out
// across workers; everywhere else the argument is accepted and ignored.
CensusReport census_cubic_report(const Int& a, const std::optional<RationalScaling>& s,
                                 bool nonneg, int workers);
CensusReport census_robinson_report(int n, const Int& a);
CensusReport census_prefix3_report(int n, const Int& a);
CensusReport attainable_report(int n, const Int& a);
CensusReport attainable_report(int n, const Int& a, const BSequence& bs,
                               const std::string& bseq_text);
CensusReport disc_bounded_report(const Int& a, const Int& b, const Int& d);
CensusReport disc_squarefree_report(const Int& a);
CensusReport disc_almostprime_report(long h);
CensusReport disc_almostprime_report(long h, const Int& a, const Int& b);
CensusReport disc_squares_report(long h);
CensusReport sieve_quad_report(long a, long b, long c, long x, long y, long z);
std::vector<CensusReport> constants_reports(int n, long truncation);

// Fixed sample of census invocations exercised at several worker counts by
// the determinism check.
std::vector<CensusReport> determinism_sample_rows(int workers);

}  // namespace rootcensus

#endif
