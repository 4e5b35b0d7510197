// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace tbench::studies {

// Loads a JSON campaign config; throws std::invalid_argument on parse errors.
nlohmann::json load_config(const std::filesystem::path& path);

// Runs the study named by config["study"], writing data.csv and summary.json
// (plus any per-study extras) into out_dir. The summary's "config" object is
// the fully materialized effective configuration: feeding it back reproduces
// the run byte for byte.
void run_study(nlohmann::json config, const std::filesystem::path& out_dir);

} // namespace tbench::studies
