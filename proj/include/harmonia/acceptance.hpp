// One-shot verification suite: each criterion exercises a documented contract
// at a fixed tolerance and reports one pass/fail line.  All randomness flows
// from the master seed, so a seed reproduces the report byte for byte.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace harmonia {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string threshold;
  std::string note;  // optional context, empty when unused
};

// Runs every criterion (fanning out across `threads` workers when asked) and
// returns results in fixed order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int threads = 1);

// Prints the standard report; returns the number of failed criteria.
int report_acceptance(std::uint64_t seed, std::ostream& out, int threads = 1);

}  // namespace harmonia
