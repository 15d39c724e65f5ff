// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENKB_SERVICE_RUN_CONFIG_H_
#define GENKB_SERVICE_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>

#include "genkb/active/episode.h"
#include "genkb/embed/trainer.h"
#include "genkb/eval/bounds.h"
#include "json.hpp"

namespace genkb {

// Environment variable that overrides RunConfig::output_dir.
inline constexpr const char* kOutputDirEnv = "GENKB_OUTPUT_DIR";

struct RunConfig {
  std::filesystem::path kb;
  std::filesystem::path taxonomy;
  std::filesystem::path typemap;
  std::filesystem::path schema;
  // Optional pre-trained model; trained from `kb` when empty.
  std::filesystem::path model;
  TrainConfig train;
  EpisodeConfig active;
  EstimatorParams estimator;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "genkb-out";

  // Copies `seed` into every seeded component.
  void PropagateSeed();
  // Throws ConfigError on invalid parameters or missing input files.
  void Validate() const;
  bool operator==(const RunConfig&) const = default;
};

// Unknown keys are rejected. Relative paths resolve against `base_dir`.
// Throws ConfigError on malformed values.
RunConfig RunConfigFromJson(const nlohmann::json& json,
                            const std::filesystem::path& base_dir = {});
nlohmann::json ToJson(const RunConfig& config);
// Reads a JSON config file, then applies the output directory override.
RunConfig LoadRunConfig(const std::filesystem::path& path);
// Replaces output_dir with the environment override when it is set.
void ApplyEnvironment(RunConfig& config);

TrainConfig TrainConfigFromJson(const nlohmann::json& json,
                                TrainConfig base = {});
nlohmann::json ToJson(const TrainConfig& config);
EpisodeConfig EpisodeConfigFromJson(const nlohmann::json& json,
                                    EpisodeConfig base = {});
nlohmann::json ToJson(const EpisodeConfig& config);

}  // namespace genkb

#endif  // GENKB_SERVICE_RUN_CONFIG_H_
