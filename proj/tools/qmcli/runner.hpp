#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmcli/config.hpp"

namespace qmcli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct CheckInfo {
  std::string id;
  std::string statement;
  std::string anchor;
};

/// Registered checks, in the order they run.
const std::vector<CheckInfo>& registered_checks();
bool is_registered(const std::string& id);

/// Runs every requested check; verdicts are PASS, FAIL or FINDING.
/// Library errors other than theorem contradictions propagate.
Json run_scenario(const ScenarioConfig& cfg);

/// 0 when every verdict is PASS, 1 otherwise.
int exit_code(const Json& report);

/// JSON patch from a to b, ignoring timings. Throws qm::Error on schema mismatch.
Json diff_reports(const Json& a, const Json& b);

}  // namespace qmcli
