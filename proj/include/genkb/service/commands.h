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

#ifndef GENKB_SERVICE_COMMANDS_H_
#define GENKB_SERVICE_COMMANDS_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "genkb/eval/oracle.h"
#include "genkb/guidance/predict.h"
#include "genkb/service/run_config.h"
#include "genkb/service/session_service.h"

namespace genkb {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

// Entry point of the `genkb` tool. Reads interactive answers from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

// Loads the KB and background named by `config`, then loads the model or,
// when none is configured, trains one on the KB.
ServiceContext BuildServiceContext(const RunConfig& config);

// Prediction CSV: header "source,relation,target,score,probability", one
// row per triple, reals printed with %.17g.
void WritePredictionsCsv(const EmbeddingModel& model,
                         const std::vector<ScoredTriple>& ranked,
                         std::ostream& out);
RankedPredictions ReadPredictionsCsv(std::istream& in,
                                     const std::string& source_name);

// The bundled fixture: kb, taxonomy, typemap, schema and truth TSVs plus a
// config.json wiring them together. Returns the new entity's name.
std::string WriteFixture(const std::filesystem::path& dir, std::uint64_t seed);

}  // namespace genkb

#endif  // GENKB_SERVICE_COMMANDS_H_
