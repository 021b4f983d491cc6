#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dmloc {

struct VerifyOptions {
  uint64_t seed = 1;
  unsigned cap_degree = 4;
  unsigned cap_ext = 12;
  uint64_t cap_iterations = 100000;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  size_t cases = 0;
  size_t skipped = 0;                 // random instances rejected before testing
  std::vector<std::string> failures;  // at most a handful, smallest first
  nlohmann::json details = nlohmann::json::object();
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs one suite; deterministic for a given seed. Throws
/// std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace dmloc
