#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qm/error.hpp"
#include "qmcli/config.hpp"
#include "qmcli/runner.hpp"

namespace fs = std::filesystem;

namespace {

// Relative paths resolve against QMCLI_WORKDIR when it is set.
fs::path resolve(const std::string& p) {
  const fs::path path(p);
  if (path.is_absolute()) return path;
  if (const char* wd = std::getenv("QMCLI_WORKDIR"); wd && *wd) return fs::path(wd) / path;
  return path;
}

qmcli::Json read_report(const std::string& p) {
  std::ifstream in(resolve(p));
  if (!in) throw qm::Error("cannot read report " + p);
  try {
    return qmcli::Json::parse(in);
  } catch (const qmcli::Json::parse_error& e) {
    throw qm::ParseError(p + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiinvariants of Coxeter groups: scenario runner"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a scenario config and write its report");
  std::string config_path, group, mults, out;
  unsigned cap = 0;
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--cap", cap, "override degree_cap");
  run->add_option("--group", group, "override the group label");
  run->add_option("--m", mults, "override multiplicities, e.g. \"1 0\"");
  run->add_option("--out", out, "report path (default: config 'output', else stdout)");

  auto* list = app.add_subcommand("list-checks", "list registered check ids");

  auto* diff = app.add_subcommand("diff", "compare two reports, ignoring timings");
  std::string left, right;
  diff->add_option("a", left, "first report")->required();
  diff->add_option("b", right, "second report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& c : qmcli::registered_checks()) std::cout << c.id << "\t" << c.statement << "\n";
      return 0;
    }
    if (*diff) {
      const auto d = qmcli::diff_reports(read_report(left), read_report(right));
      if (d.empty()) {
        std::cout << "no differences\n";
        return 0;
      }
      std::cout << d.dump(2) << "\n";
      return 1;
    }

    auto cfg = qmcli::load_config(resolve(config_path).string());
    if (run->count("--group")) {
      cfg.group = group;
      cfg.arrangement.clear();
    }
    if (run->count("--m")) cfg.multiplicities = qmcli::parse_multiplicities(mults);
    if (run->count("--cap")) cfg.degree_cap = cap;
    if (run->count("--out")) cfg.output = out;

    const auto report = qmcli::run_scenario(cfg);
    const std::string text = report.dump(2) + "\n";
    if (cfg.output.empty() || cfg.output == "-") {
      std::cout << text;
    } else {
      const fs::path target = resolve(cfg.output);
      if (target.has_parent_path()) fs::create_directories(target.parent_path());
      std::ofstream os(target);
      if (!os) throw qm::Error("cannot write report " + target.string());
      os << text;
    }
    for (const auto& r : report.at("results"))
      std::cerr << r.at("verdict").get<std::string>() << "  " << r.at("check").get<std::string>() << "\n";
    return qmcli::exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "qmcli: " << e.what() << "\n";
    return 2;
  }
}
