#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcis {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::vector<int> only;      // empty: every check
  std::uint64_t seed = 1;     // base seed; checks derive their own streams
  double scah_margin = 6.0;   // connectivity margin for the SC-AH throughput sweep
  std::size_t scah_seeds = 4; // trials per n in that sweep
  unsigned workers = 0;       // 0: hardware concurrency
  std::function<void(const CheckResult&)> on_result;
};

constexpr int kCheckCount = 10;
const char* check_name(int id);

CheckResult check_hop_count_law(const VerifyOptions& opts);
CheckResult check_schedule_feasibility(const VerifyOptions& opts);
CheckResult check_interfering_cells(const VerifyOptions& opts);
CheckResult check_coloring_bounds(const VerifyOptions& opts);
CheckResult check_sigma1_exactness(const VerifyOptions& opts);
CheckResult check_scah_reduction(const VerifyOptions& opts);
CheckResult check_delay_gain(const VerifyOptions& opts);
CheckResult check_concentration(const VerifyOptions& opts);
CheckResult check_destination_maximum(const VerifyOptions& opts);
CheckResult check_classifier_fixtures(const VerifyOptions& opts);

CheckResult run_check(int id, const VerifyOptions& opts);
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace mcis
