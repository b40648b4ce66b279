// Runs the full verification suite once with the default seed and exits
// nonzero if any criterion fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "harmonia/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::stoull(argv[1]);
  int threads = 1;
  if (const char* env = std::getenv("HARMONIA_THREADS")) threads = std::max(1, std::atoi(env));
  return harmonia::report_acceptance(seed, std::cout, threads) == 0 ? 0 : 1;
}
