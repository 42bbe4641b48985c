#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qmcli {

/// One scenario. The file format is flat `key = value` lines; `#` starts a comment.
///
///   name           report label (defaults to the file stem)
///   group          group label, e.g. "B2", "(Z/2)^3", "B2xA1"
///   arrangement    "covector : m ; covector : m" instead of a group
///   multiplicities one integer per class, or one for all classes
///   degree_cap     highest degree examined (default d + max d_i, or 12 for arrangements)
///   checks         comma separated check ids
///   output         report path
///   samples        random samples for the adjointness check (default 6)
///   det_cap        largest |W| for the determinant (default 8)
struct ScenarioConfig {
  std::string name;
  std::string group;
  std::string arrangement;
  std::vector<unsigned> multiplicities{1};
  std::optional<unsigned> degree_cap;
  std::vector<std::string> checks;
  std::string output;
  unsigned samples = 6;
  unsigned det_cap = 8;
};

/// Throws qm::ParseError on unknown keys, malformed values or unknown check ids.
ScenarioConfig parse_config(const std::string& text, const std::string& default_name = "scenario");
ScenarioConfig load_config(const std::string& path);

std::vector<unsigned> parse_multiplicities(const std::string& text);

}  // namespace qmcli
