#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace apxcount {

struct AcceptanceOptions {
  bool quick = false;             // 10^3 simulation trials, smaller LP grid
  bool rederive_fixtures = false; // rerun the full minimal-degree searches
  bool corrupt_phi_sign = false;  // mutation hook: flip one witness sign
  std::uint64_t seed = 20240601;
  std::vector<int> only;          // criterion numbers to run; empty = all
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // deterministic: no timings
  double seconds = 0.0;
};

/// Runs the acceptance criteria in order; `progress` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// "AC<id> PASS|FAIL <title> :: <detail>"
std::string format_line(const CriterionResult& r);

}  // namespace apxcount
