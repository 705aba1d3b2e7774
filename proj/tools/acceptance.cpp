// Acceptance gate: runs every verification criterion and prints one PASS or
// FAIL line per criterion with its evidence.  Exits 0 only if all pass.
// Optional arguments select criterion ids (all 16 by default); an optional
// --seed N sets the seed for the randomized checks.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "rootcensus/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260822;
  std::vector<int> ids;
  for (int i = 1; i < argc; i++) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      try {
        ids.push_back(std::stoi(arg));
      } catch (const std::exception&) {
        std::cerr << "usage: acceptance [--seed N] [criterion ids]\n";
        return 1;
      }
    }
  }
  if (ids.empty()) ids = rootcensus::suite_criteria("all");

  int failed = 0;
  for (int id : ids) {
    rootcensus::CriterionResult r = rootcensus::run_criterion(id, seed);
    if (!r.pass) failed++;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " ("
              << r.elapsed_ms << " ms): " << r.detail << "\n"
              << std::flush;
  }
  if (failed > 0)
    std::cout << failed << " of " << ids.size() << " criteria failed\n";
  else
    std::cout << "all " << ids.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
