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

#include "genkb/active/session.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <tuple>

namespace genkb {
namespace {

using nlohmann::json;

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void Mix(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= kFnvPrime;
  }
}

json CandidateJson(const CandidateFact& c) {
  return {{"relation", c.relation},
          {"other", c.other},
          {"orientation", std::string(ToString(c.orientation))},
          {"p", c.p}};
}

CandidateFact CandidateFromJson(const json& j) {
  CandidateFact c;
  c.relation = j.at("relation").get<std::string>();
  c.other = j.at("other").get<std::string>();
  const auto o = j.at("orientation").get<std::string>();
  if (o == "source") {
    c.orientation = Orientation::kSource;
  } else if (o == "target") {
    c.orientation = Orientation::kTarget;
  } else {
    throw ParseError("session", 0, "invalid orientation '" + o + "'");
  }
  c.p = j.at("p").get<double>();
  return c;
}

}  // namespace

std::string_view ToString(SelectionMethod method) {
  return method == SelectionMethod::kSubmodular ? "submodular" : "top-k";
}

std::optional<SelectionMethod> ParseSelectionMethod(std::string_view text) {
  if (text == "submodular" || text == "sm") return SelectionMethod::kSubmodular;
  if (text == "top-k" || text == "tk") return SelectionMethod::kTopK;
  return std::nullopt;
}

std::string QuerySession::FactId(std::size_t index) {
  return "q" + std::to_string(index);
}

std::optional<std::size_t> QuerySession::ParseFactId(std::string_view id) const {
  if (id.size() < 2 || id[0] != 'q') return std::nullopt;
  std::size_t index = 0;
  const char* first = id.data() + 1;
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index >= candidates.size()) {
    return std::nullopt;
  }
  if (FactId(index) != id) return std::nullopt;  // rejects leading zeros
  return index;
}

bool QuerySession::IsSelected(std::string_view id) const {
  auto index = ParseFactId(id);
  return index && std::find(selected.begin(), selected.end(), *index) !=
                      selected.end();
}

std::vector<std::string> QuerySession::SelectedFactIds() const {
  std::vector<std::string> ids;
  for (auto i : selected) ids.push_back(FactId(i));
  return ids;
}

std::vector<std::string> QuerySession::PendingFactIds() const {
  std::vector<std::string> ids;
  for (auto i : selected) {
    if (!annotations.count(FactId(i))) ids.push_back(FactId(i));
  }
  return ids;
}

void QuerySession::Validate() const {
  thresholds.Validate();
  weights.Validate();
  if (selected.size() > budget) throw Error("more selections than budget");
  std::set<std::size_t> seen;
  for (auto i : selected) {
    if (i >= candidates.size()) throw Error("selection outside candidates");
    if (!seen.insert(i).second) throw Error("duplicate selection");
  }
  using Key = std::tuple<std::string, std::string, Orientation>;
  std::set<Key> keys;
  for (const auto& c : candidates) {
    if (c.p < thresholds.tau_low || c.p > thresholds.tau_high) {
      throw Error("candidate estimate outside [tau_low, tau_high]");
    }
    if (!keys.emplace(c.relation, c.other, c.orientation).second) {
      throw Error("duplicate candidate");
    }
  }
  for (const auto& c : accepted) {
    if (c.p < thresholds.kappa_m) throw Error("accepted estimate below kappa_m");
    if (!keys.emplace(c.relation, c.other, c.orientation).second) {
      throw Error("candidate list and accepted list overlap");
    }
  }
  for (const auto& [id, _] : annotations) {
    if (!IsSelected(id)) throw Error("annotation for unselected fact " + id);
  }
}

std::string RenderQuestion(const NamedTriple& triple, QuantLabel quantifier) {
  return "is it true that " + std::string(ToString(quantifier)) + " " +
         triple.source + " " + triple.relation + " some " + triple.target + "?";
}

std::string ModelSnapshotId(const EmbeddingModel& model) {
  std::uint64_t h = kFnvOffset;
  const auto ef = model.entities().Fingerprint();
  const auto rf = model.relations().Fingerprint();
  Mix(h, &ef, sizeof ef);
  Mix(h, &rf, sizeof rf);
  Mix(h, model.entity_data().data(),
      model.entity_data().size() * sizeof(double));
  Mix(h, model.relation_data().data(),
      model.relation_data().size() * sizeof(double));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json ToJson(const QuerySession& s) {
  json candidates = json::array();
  for (const auto& c : s.candidates) candidates.push_back(CandidateJson(c));
  json accepted = json::array();
  for (const auto& c : s.accepted) accepted.push_back(CandidateJson(c));
  json annotations = json::object();
  for (const auto& [id, label] : s.annotations) {
    annotations[id] = std::string(ToString(label));
  }
  return {
      {"entity", s.entity},
      {"mode", std::string(ToString(s.mode))},
      {"selection", std::string(ToString(s.selection))},
      {"siblings", s.siblings},
      {"thresholds",
       {{"kappa_m", s.thresholds.kappa_m},
        {"tau_low", s.thresholds.tau_low},
        {"tau_high", s.thresholds.tau_high}}},
      {"weights",
       {{"coverage", s.weights.coverage},
        {"diversity", s.weights.diversity},
        {"redundancy", s.weights.redundancy}}},
      {"budget", s.budget},
      {"candidates", candidates},
      {"accepted", accepted},
      {"selected", s.selected},
      {"annotations", annotations},
      {"model_snapshot", s.model_snapshot},
      {"seed", s.seed},
  };
}

QuerySession SessionFromJson(const json& j) {
  try {
    QuerySession s;
    s.entity = j.at("entity").get<std::string>();
    auto mode = ParseProposalMode(j.at("mode").get<std::string>());
    if (!mode) throw ParseError("session", 0, "invalid mode");
    s.mode = *mode;
    auto selection = ParseSelectionMethod(j.at("selection").get<std::string>());
    if (!selection) throw ParseError("session", 0, "invalid selection method");
    s.selection = *selection;
    s.siblings = j.at("siblings").get<std::vector<std::string>>();
    const auto& t = j.at("thresholds");
    s.thresholds = {t.at("kappa_m").get<double>(), t.at("tau_low").get<double>(),
                    t.at("tau_high").get<double>()};
    const auto& w = j.at("weights");
    s.weights = {w.at("coverage").get<double>(), w.at("diversity").get<double>(),
                 w.at("redundancy").get<double>()};
    s.budget = j.at("budget").get<std::size_t>();
    for (const auto& c : j.at("candidates")) {
      s.candidates.push_back(CandidateFromJson(c));
    }
    for (const auto& c : j.at("accepted")) {
      s.accepted.push_back(CandidateFromJson(c));
    }
    s.selected = j.at("selected").get<std::vector<std::size_t>>();
    for (const auto& [id, label] : j.at("annotations").items()) {
      auto q = ParseQuantLabel(label.get<std::string>());
      if (!q) throw ParseError("session", 0, "invalid label for " + id);
      s.annotations[id] = *q;
    }
    s.model_snapshot = j.at("model_snapshot").get<std::string>();
    s.seed = j.at("seed").get<std::uint64_t>();
    return s;
  } catch (const json::exception& e) {
    throw ParseError("session", 0, e.what());
  }
}

}  // namespace genkb
