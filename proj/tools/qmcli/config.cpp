#include "qmcli/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qm/error.hpp"
#include "qmcli/runner.hpp"

namespace qmcli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<unsigned>(v);
  } catch (const std::logic_error&) {
    throw qm::ParseError("'" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
}

}  // namespace

std::vector<unsigned> parse_multiplicities(const std::string& text) {
  std::vector<unsigned> out;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) out.push_back(parse_unsigned("multiplicities", tok));
  if (out.empty()) throw qm::ParseError("empty multiplicities");
  return out;
}

ScenarioConfig parse_config(const std::string& text, const std::string& default_name) {
  ScenarioConfig cfg;
  cfg.name = default_name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw qm::ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      cfg.name = value;
    } else if (key == "group") {
      cfg.group = value;
    } else if (key == "arrangement") {
      cfg.arrangement = value;
    } else if (key == "multiplicities") {
      cfg.multiplicities = parse_multiplicities(value);
    } else if (key == "degree_cap") {
      cfg.degree_cap = parse_unsigned(key, value);
    } else if (key == "checks") {
      std::istringstream list(value);
      std::string id;
      while (std::getline(list, id, ',')) {
        id = trim(id);
        if (id.empty()) continue;
        if (!is_registered(id)) throw qm::ParseError("unknown check id '" + id + "'");
        cfg.checks.push_back(id);
      }
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "samples") {
      cfg.samples = parse_unsigned(key, value);
    } else if (key == "det_cap") {
      cfg.det_cap = parse_unsigned(key, value);
    } else {
      throw qm::ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.group.empty() && cfg.arrangement.empty()) {
    // the rank-6 scenario carries its own group
    bool standalone = !cfg.checks.empty();
    for (const auto& c : cfg.checks)
      if (c != "fv-counterexample-b6") standalone = false;
    if (!standalone) throw qm::ParseError("config needs 'group' or 'arrangement'");
  }
  if (!cfg.group.empty() && !cfg.arrangement.empty())
    throw qm::ParseError("'group' and 'arrangement' are exclusive");
  if (cfg.checks.empty()) throw qm::ParseError("config lists no checks");
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qm::ParseError("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace qmcli
