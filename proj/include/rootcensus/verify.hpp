#ifndef ROOTCENSUS_VERIFY_HPP
#define ROOTCENSUS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rootcensus {

// Outcome of one verification criterion.  A criterion that finds a genuine
// counterexample reports pass = false and says where; nothing downgrades a
// failed check into a warning.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long elapsed_ms = 0;
};

// Criterion ids belonging to a named suite: "cubic", "maclaurin", "disc", or
// "all".  Unknown names throw std::invalid_argument.
std::vector<int> suite_criteria(const std::string& suite);

const char* criterion_name(int id);

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace rootcensus

#endif
