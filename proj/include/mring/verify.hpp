#ifndef MRING_VERIFY_HPP
#define MRING_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mring {

struct VerifyOptions {
  int n = 4;
  bool exhaustive = true;
  long long samples = 200;
  std::uint64_t seed = 0;
};

struct PropertyResult {
  std::string id;
  long long instances = 0;
  bool ok = true;
  std::string counterexample;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  bool all_ok() const;
};

// Runs the whole property suite on an exhaustive (n <= 5) or seeded sampled
// matroid pool. Property sweeps fan out across threads; results are merged
// by instance index and listed sorted by property id.
VerifyReport run_verify(const VerifyOptions& opt);

std::string format_report(const VerifyReport& report);

}  // namespace mring

#endif
