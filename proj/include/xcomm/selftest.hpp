#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xcomm {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string counterexample;  // first failure, empty when all passed

  bool ok() const noexcept { return passed == total; }
};

/// Randomized oracle-equivalence and algebraic-law suites. The same seed
/// always produces the same instance stream.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t iterations);

}  // namespace xcomm
