#ifndef EPSC_VERIFY_HPP
#define EPSC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace epsc {

// Outcome of one randomized verification suite.  Failures carry a message
// and, when the instance fits the bundle format, a minimal reproducer
// bundle in canonical JSON.
struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failing trial
  std::string reproducer;             // bundle JSON of the first failure

  bool ok() const { return failures == 0; }
};

// Known suite names, in display order.
std::vector<std::string> suiteNames();

// Runs `name` for `trials` seeded trials; `jobs` > 1 runs trials in
// parallel with output ordered by trial index.  Throws on unknown names.
SuiteResult runSuite(const std::string& name, int trials, std::uint64_t seed,
                     int jobs = 1);

}  // namespace epsc

#endif
