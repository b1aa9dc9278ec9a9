#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncnn/family.hpp"

namespace ncnn {

struct CheckRecord {
  std::string name;
  std::string family;
  int rank = 0;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
  double ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

extern const std::set<std::string> kAllChecks;  // counts roundtrip type
                                                // uniform central carter

// Run the selected checks over every family at ranks 2..max_rank (capped per
// check for feasibility).  jobs > 1 fans the (check, family, rank) tasks out
// across OpenMP threads; the report content is identical to the serial run.
VerificationReport run_verification(int max_rank,
                                    const std::set<std::string>& checks,
                                    int jobs);

}  // namespace ncnn
