// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbench/errors.hpp"
#include "tbench/studies.hpp"
#include "tbench/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tbench: Monte Carlo workbench for system-level 6G link studies"};
  app.set_version_flag("--version", tbench::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> drops;
  std::string out_dir = "out";

  const char* studies[] = {"irs", "cellfree", "iab", "pqam", "thz", "cc", "budget"};
  for (const char* name : studies) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " study");
    sub->add_option("--config", config_path, "JSON campaign configuration")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--drops", drops, "override the config drop count");
    sub->add_option("--out", out_dir, "output directory (data.csv, summary.json)");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string study = app.get_subcommands().front()->get_name();

  try {
    nlohmann::json cfg = tbench::studies::load_config(config_path);
    if (!cfg.contains("study")) cfg["study"] = study;
    if (cfg.at("study").get<std::string>() != study)
      throw std::invalid_argument("config study '" +
                                  cfg.at("study").get<std::string>() +
                                  "' does not match subcommand '" + study + "'");
    if (seed) cfg["seed"] = *seed;
    if (drops) cfg["n_drops"] = *drops;
    tbench::studies::run_study(std::move(cfg), out_dir);
    if (study == "cc") { // echo the gain table
      std::ifstream table(std::filesystem::path(out_dir) / "data.csv");
      std::cout << table.rdbuf();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const tbench::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
