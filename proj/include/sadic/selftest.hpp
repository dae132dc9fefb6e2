#ifndef SADIC_SELFTEST_HPP
#define SADIC_SELFTEST_HPP

#include <string>
#include <vector>

namespace sadic {

// One named check from a built-in verification suite.
struct SelfTestOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs actual on failure, empty otherwise
};

// Suite names accepted by run_selftest, in the order "all" executes them.
std::vector<std::string> selftest_suites();

// Runs one suite or "all"; throws std::invalid_argument on unknown names.
// Every check is deterministic and self-contained (no input files); a
// full run stays under a minute on commodity hardware.
std::vector<SelfTestOutcome> run_selftest(const std::string& suite);

}  // namespace sadic

#endif
