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

#include "genkb/service/run_config.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "genkb/error.h"

namespace genkb {
namespace {

using nlohmann::json;

void CheckKeys(const json& j, const std::string& where,
               const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

std::filesystem::path ReadPath(const json& j, const char* key,
                               const std::filesystem::path& base) {
  std::string text;
  Read(j, key, text, "config");
  if (text.empty()) return {};
  std::filesystem::path p(text);
  return p.is_absolute() || base.empty() ? p : base / p;
}

std::string RulesText(const RuleSet& rules) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const auto rule = static_cast<Rule>(i);
    if (!rules.Has(rule)) continue;
    if (!out.empty()) out += ",";
    out += ToString(rule);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

TrainConfig TrainConfigFromJson(const json& j, TrainConfig c) {
  const std::string where = "train config";
  CheckKeys(j, where,
            {"dim", "epochs", "learning_rate", "adagrad", "negatives",
             "same_type_fraction", "corrupt_target", "l2", "seed", "loss",
             "fft"});
  Read(j, "dim", c.dim, where);
  Read(j, "epochs", c.epochs, where);
  Read(j, "learning_rate", c.learning_rate, where);
  Read(j, "adagrad", c.adagrad, where);
  Read(j, "negatives", c.negatives, where);
  Read(j, "same_type_fraction", c.same_type_fraction, where);
  Read(j, "corrupt_target", c.corrupt_target, where);
  Read(j, "l2", c.l2, where);
  Read(j, "seed", c.seed, where);
  Read(j, "fft", c.fft, where);
  if (j.contains("loss")) {
    std::string loss;
    Read(j, "loss", loss, where);
    if (loss == "binary") {
      c.loss = LossMode::kBinary;
    } else if (loss == "multiclass") {
      c.loss = LossMode::kMulticlass;
    } else {
      throw ConfigError("loss must be 'binary' or 'multiclass'");
    }
  }
  return c;
}

json ToJson(const TrainConfig& c) {
  return {{"dim", c.dim},
          {"epochs", c.epochs},
          {"learning_rate", c.learning_rate},
          {"adagrad", c.adagrad},
          {"negatives", c.negatives},
          {"same_type_fraction", c.same_type_fraction},
          {"corrupt_target", c.corrupt_target},
          {"l2", c.l2},
          {"seed", c.seed},
          {"loss", c.loss == LossMode::kBinary ? "binary" : "multiclass"},
          {"fft", c.fft}};
}

EpisodeConfig EpisodeConfigFromJson(const json& j, EpisodeConfig c) {
  const std::string where = "active config";
  CheckKeys(j, where,
            {"mode", "selection", "budget", "kappa_m", "tau_low", "tau_high",
             "w_coverage", "w_diversity", "w_redundancy",
             "stop_on_nonpositive_gain", "expand_taxonomy", "rules",
             "derived_weight", "keep_threshold", "report_threshold", "seed"});
  if (j.contains("mode")) {
    std::string text;
    Read(j, "mode", text, where);
    auto mode = ParseProposalMode(text);
    if (!mode) throw ConfigError("unknown proposal mode '" + text + "'");
    c.mode = *mode;
  }
  if (j.contains("selection")) {
    std::string text;
    Read(j, "selection", text, where);
    auto method = ParseSelectionMethod(text);
    if (!method) throw ConfigError("unknown selection method '" + text + "'");
    c.selection = *method;
  }
  Read(j, "budget", c.budget, where);
  Read(j, "kappa_m", c.thresholds.kappa_m, where);
  Read(j, "tau_low", c.thresholds.tau_low, where);
  Read(j, "tau_high", c.thresholds.tau_high, where);
  Read(j, "w_coverage", c.weights.coverage, where);
  Read(j, "w_diversity", c.weights.diversity, where);
  Read(j, "w_redundancy", c.weights.redundancy, where);
  Read(j, "stop_on_nonpositive_gain", c.greedy.stop_on_nonpositive_gain, where);
  Read(j, "expand_taxonomy", c.expand_taxonomy, where);
  if (j.contains("rules")) {
    std::string text;
    Read(j, "rules", text, where);
    c.expand.rules = RuleSet::Parse(text);
  }
  Read(j, "derived_weight", c.expand.derived_weight, where);
  Read(j, "keep_threshold", c.expand.keep_threshold, where);
  Read(j, "report_threshold", c.report_threshold, where);
  Read(j, "seed", c.seed, where);
  return c;
}

json ToJson(const EpisodeConfig& c) {
  return {{"mode", ToString(c.mode)},
          {"selection", ToString(c.selection)},
          {"budget", c.budget},
          {"kappa_m", c.thresholds.kappa_m},
          {"tau_low", c.thresholds.tau_low},
          {"tau_high", c.thresholds.tau_high},
          {"w_coverage", c.weights.coverage},
          {"w_diversity", c.weights.diversity},
          {"w_redundancy", c.weights.redundancy},
          {"stop_on_nonpositive_gain", c.greedy.stop_on_nonpositive_gain},
          {"expand_taxonomy", c.expand_taxonomy},
          {"rules", RulesText(c.expand.rules)},
          {"derived_weight", c.expand.derived_weight},
          {"keep_threshold", c.expand.keep_threshold},
          {"report_threshold", c.report_threshold},
          {"seed", c.seed}};
}

void RunConfig::PropagateSeed() {
  train.seed = seed;
  active.seed = seed;
  active.train = train;
}

void RunConfig::Validate() const {
  train.Validate();
  active.Validate();
  estimator.Validate();
  const std::pair<const char*, const std::filesystem::path*> inputs[] = {
      {"kb", &kb}, {"taxonomy", &taxonomy}, {"typemap", &typemap},
      {"schema", &schema}};
  for (const auto& [name, path] : inputs) {
    if (path->empty()) throw ConfigError(std::string(name) + " path is required");
    if (!std::filesystem::exists(*path)) {
      throw ConfigError(std::string(name) + " not found: " + path->string());
    }
  }
  if (!model.empty() && !std::filesystem::exists(model)) {
    throw ConfigError("model not found: " + model.string());
  }
  if (output_dir.empty()) throw ConfigError("output directory is required");
}

RunConfig RunConfigFromJson(const json& j, const std::filesystem::path& base) {
  CheckKeys(j, "config",
            {"kb", "taxonomy", "typemap", "schema", "model", "train", "active",
             "estimator", "seed", "output_dir"});
  RunConfig c;
  c.kb = ReadPath(j, "kb", base);
  c.taxonomy = ReadPath(j, "taxonomy", base);
  c.typemap = ReadPath(j, "typemap", base);
  c.schema = ReadPath(j, "schema", base);
  c.model = ReadPath(j, "model", base);
  if (j.contains("output_dir")) c.output_dir = ReadPath(j, "output_dir", base);
  Read(j, "seed", c.seed, "config");
  if (j.contains("train")) c.train = TrainConfigFromJson(j.at("train"));
  if (j.contains("active")) c.active = EpisodeConfigFromJson(j.at("active"));
  if (j.contains("estimator")) {
    const auto& e = j.at("estimator");
    CheckKeys(e, "estimator config", {"alpha", "delta", "ytilde"});
    Read(e, "alpha", c.estimator.alpha, "estimator config");
    Read(e, "delta", c.estimator.delta, "estimator config");
    Read(e, "ytilde", c.estimator.ytilde, "estimator config");
  }
  c.PropagateSeed();
  return c;
}

json ToJson(const RunConfig& c) {
  return {{"kb", c.kb.string()},
          {"taxonomy", c.taxonomy.string()},
          {"typemap", c.typemap.string()},
          {"schema", c.schema.string()},
          {"model", c.model.string()},
          {"train", ToJson(c.train)},
          {"active", ToJson(c.active)},
          {"estimator",
           {{"alpha", c.estimator.alpha},
            {"delta", c.estimator.delta},
            {"ytilde", c.estimator.ytilde}}},
          {"seed", c.seed},
          {"output_dir", c.output_dir.string()}};
}

void ApplyEnvironment(RunConfig& config) {
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    config.output_dir = dir;
  }
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config not found: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("malformed config " + path.string() + ": " + e.what());
  }
  auto config = RunConfigFromJson(j, path.parent_path());
  ApplyEnvironment(config);
  return config;
}

}  // namespace genkb
