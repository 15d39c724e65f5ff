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

#include "genkb/service/commands.h"

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "genkb/active/episode.h"
#include "genkb/embed/model_io.h"
#include "genkb/eval/bounds.h"
#include "genkb/eval/precision.h"
#include "genkb/guidance/expand_train.h"
#include "genkb/guidance/schema_check.h"
#include "genkb/guidance/taxonomy_rules.h"
#include "genkb/kb/io.h"
#include "genkb/kb/split.h"
#include "genkb/service/http_server.h"
#include "genkb/synthetic/worlds.h"

namespace genkb {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string Real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

// Paths and seed shared by every data-consuming command.
struct DataFlags {
  std::string config, kb, taxonomy, typemap, schema, model, output_dir;
  std::uint64_t seed = 1;
  CLI::Option* seed_option = nullptr;

  void Add(CLI::App* app) {
    app->add_option("--config", config, "JSON run config");
    app->add_option("--kb", kb, "knowledge base TSV");
    app->add_option("--taxonomy", taxonomy, "taxonomy TSV");
    app->add_option("--typemap", typemap, "type map TSV");
    app->add_option("--schema", schema, "schema TSV");
    app->add_option("--model", model, "model file");
    app->add_option("--output-dir", output_dir, "output directory");
    seed_option = app->add_option("--seed", seed, "seed for every seeded step");
  }

  RunConfig Resolve() const {
    RunConfig c;
    if (!config.empty()) {
      c = LoadRunConfig(config);
    } else {
      ApplyEnvironment(c);
    }
    if (!kb.empty()) c.kb = kb;
    if (!taxonomy.empty()) c.taxonomy = taxonomy;
    if (!typemap.empty()) c.typemap = typemap;
    if (!schema.empty()) c.schema = schema;
    if (!model.empty()) c.model = model;
    if (!output_dir.empty()) c.output_dir = output_dir;
    if (seed_option->count()) c.seed = seed;
    c.PropagateSeed();
    return c;
  }
};

struct TrainFlags {
  std::size_t dim = 0, negatives = 0;
  int epochs = 0;
  double lr = 0, l2 = 0;
  std::string loss;
  bool fft = false;
  std::vector<CLI::Option*> options;

  void Add(CLI::App* app) {
    options = {app->add_option("--dim", dim, "embedding dimension"),
               app->add_option("--epochs", epochs, "training epochs"),
               app->add_option("--lr", lr, "learning rate"),
               app->add_option("--negatives", negatives, "negatives per positive"),
               app->add_option("--l2", l2, "L2 penalty"),
               app->add_option("--loss", loss, "binary or multiclass"),
               app->add_flag("--fft", fft, "FFT correlation")};
  }

  void Apply(RunConfig& c) const {
    if (options[0]->count()) c.train.dim = dim;
    if (options[1]->count()) c.train.epochs = epochs;
    if (options[2]->count()) c.train.learning_rate = lr;
    if (options[3]->count()) c.train.negatives = negatives;
    if (options[4]->count()) c.train.l2 = l2;
    if (options[5]->count()) {
      c.train = TrainConfigFromJson(json{{"loss", loss}}, c.train);
    }
    if (options[6]->count()) c.train.fft = fft;
    c.PropagateSeed();
  }
};

void Require(const fs::path& path, const std::string& what) {
  if (path.empty()) throw ConfigError("--" + what + " is required");
  if (!fs::exists(path)) throw ConfigError(what + " not found: " + path.string());
}

Background LoadBackgroundOf(const RunConfig& c) {
  Require(c.taxonomy, "taxonomy");
  Require(c.typemap, "typemap");
  Require(c.schema, "schema");
  return LoadBackground(c.taxonomy, c.typemap, c.schema);
}

KnowledgeBase LoadKbOf(const RunConfig& c) {
  Require(c.kb, "kb");
  return LoadKb(c.kb);
}

std::map<NamedTriple, QuantLabel> LoadTruth(const fs::path& path) {
  Require(path, "truth");
  std::map<NamedTriple, QuantLabel> truth;
  for (const auto& lt : LoadKb(path).Canonical()) truth[lt.triple] = lt.label;
  return truth;
}

// Asks the user for each triple on `in`.
class InteractiveAnnotator : public Annotator {
 public:
  InteractiveAnnotator(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  QuantLabel Annotate(const NamedTriple& triple) override {
    while (true) {
      out_ << RenderQuestion(triple) << " [all/some/none] " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) throw Error("annotation input ended");
      if (auto label = ParseQuantLabel(line)) return *label;
      out_ << "please answer all, some or none\n";
    }
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int CmdSplit(const DataFlags& data, std::ostream& out) {
  const RunConfig c = data.Resolve();
  const auto split = SplitKb(LoadKbOf(c), c.seed);
  fs::create_directories(c.output_dir);
  const std::pair<const char*, const KnowledgeBase*> parts[] = {
      {"train.tsv", &split.train},
      {"validation.tsv", &split.validation},
      {"test.tsv", &split.test}};
  for (const auto& [name, part] : parts) {
    auto file = OpenOutput(c.output_dir / name);
    WriteKb(*part, file);
  }
  out << "split " << split.train.size() << "/" << split.validation.size() << "/"
      << split.test.size() << " into " << c.output_dir.string() << "\n";
  return kExitOk;
}

int CmdTrain(const DataFlags& data, const TrainFlags& train, bool expand,
             const std::string& model_out, std::ostream& out) {
  RunConfig c = data.Resolve();
  train.Apply(c);
  c.train.Validate();
  const KnowledgeBase kb = LoadKbOf(c);
  Background bg;
  if (!c.typemap.empty()) {
    std::ifstream in(c.typemap);
    if (!in) throw ConfigError("typemap not found: " + c.typemap.string());
    bg.types = ReadTypeMap(in, c.typemap.string());
  }
  TrainResult result;
  if (expand) {
    bg = LoadBackgroundOf(c);
    result = ExpandThenTrain(kb, bg, c.train, c.active.expand).train;
  } else {
    result = Train(kb, bg.types, c.train);
  }
  const fs::path path = !model_out.empty() ? fs::path(model_out)
                        : !c.model.empty() ? c.model
                                           : c.output_dir / "model.bin";
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  SaveModel(result.model, path);
  out << "trained " << result.epoch_losses.size() << " epochs, final loss "
      << Real(result.final_loss) << ", model " << path.string() << "\n";
  return kExitOk;
}

int CmdExpand(const DataFlags& data, const std::string& rules,
              const std::string& derived_out, std::ostream& out) {
  const RunConfig c = data.Resolve();
  const KnowledgeBase kb = LoadKbOf(c);
  Require(c.taxonomy, "taxonomy");
  std::ifstream in(c.taxonomy);
  const Taxonomy taxonomy = ReadTaxonomy(in, c.taxonomy.string());
  const auto derived =
      ExpandTaxonomy(kb, taxonomy, rules.empty() ? RuleSet::All() : RuleSet::Parse(rules));
  const fs::path path = derived_out.empty() ? c.output_dir / "derived.tsv" : fs::path(derived_out);
  auto file = OpenOutput(path);
  for (const auto& d : derived) {
    file << d.triple.source << '\t' << d.triple.relation << '\t' << d.triple.target
         << '\t' << ToString(d.label) << '\t' << ToString(d.rule) << '\n';
  }
  out << "derived " << derived.size() << " triples into " << path.string() << "\n";
  return kExitOk;
}

int CmdPredict(const DataFlags& data, const std::string& entity, std::size_t top_k,
               const std::string& predictions_out, std::ostream& out) {
  const RunConfig c = data.Resolve();
  if (c.model.empty() || !fs::exists(c.model)) {
    throw ConfigError("model not found: " + c.model.string());
  }
  const KnowledgeBase kb = LoadKbOf(c);
  const Background bg = LoadBackgroundOf(c);
  const EmbeddingModel model = LoadModel(c.model);
  PredictOptions options;
  if (!entity.empty()) options.entity = entity;
  options.top_k = top_k;
  auto predictions = PredictNewTriples(model, kb, bg, options);
  // Boundary re-check: nothing schema-inconsistent leaves the tool.
  std::vector<ScoredTriple> kept;
  for (const auto& p : predictions.ranked) {
    if (SchemaConsistent(NamesOf(model, p.triple), bg.schema, bg.types).consistent) {
      kept.push_back(p);
    }
  }
  const fs::path path =
      predictions_out.empty() ? c.output_dir / "predictions.csv" : fs::path(predictions_out);
  auto file = OpenOutput(path);
  WritePredictionsCsv(model, kept, file);
  out << "predicted " << kept.size() << " triples (" << predictions.schema_removed
      << " removed by the schema) into " << path.string() << "\n";
  return kExitOk;
}

struct EvalFlags {
  std::string config, labels, predictions, report, curve, summary;
  double alpha = 2.0;
  std::size_t delta = 64, ytilde = 0;
  int checkpoints = -1;
  CLI::Option* alpha_option = nullptr;
  CLI::Option* delta_option = nullptr;
  CLI::Option* ytilde_option = nullptr;

  EstimatorParams Resolve() const {
    EstimatorParams p;
    if (!config.empty()) p = LoadRunConfig(config).estimator;
    if (alpha_option->count()) p.alpha = alpha;
    if (delta_option->count()) p.delta = delta;
    if (ytilde_option->count()) {
      p.ytilde = ytilde;
    } else if (config.empty() || delta_option->count()) {
      p.ytilde = p.delta;
    }
    return p;
  }
};

std::vector<bool> ReadStreamLabels(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("labels not found: " + path.string());
  std::vector<bool> labels;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line != "0" && line != "1") {
      throw ParseError(path.string(), n, "expected 0 or 1, got '" + line + "'");
    }
    labels.push_back(line == "1");
  }
  if (labels.empty()) throw ParseError(path.string(), 0, "no labels");
  return labels;
}

int CmdEval(const EvalFlags& f, std::istream& in, std::ostream& out) {
  const EstimatorParams params = f.Resolve();
  params.Validate();
  const bool interactive = f.labels == "interactive";
  if (f.labels.empty()) throw ConfigError("--labels is required");
  std::optional<RankedPredictions> ranked;
  if (!f.predictions.empty()) {
    std::ifstream pin(f.predictions);
    if (!pin) throw ConfigError("predictions not found: " + f.predictions);
    ranked = ReadPredictionsCsv(pin, f.predictions);
  }
  std::optional<AnnotationOracle> oracle, exact;
  if (interactive) {
    if (!ranked) throw ConfigError("interactive labels need --predictions");
    const RankedPredictions& r = *ranked;
    oracle.emplace(r.size(), [&r, &in, &out](const std::vector<std::size_t>& ranks) {
      std::vector<bool> values;
      for (auto rank : ranks) {
        const auto& t = r.at(rank).triple;
        while (true) {
          out << "[" << rank << "] " << RenderQuestion(t, QuantLabel::kSome)
              << " [y/n] " << std::flush;
          std::string line;
          if (!std::getline(in, line)) throw Error("annotation input ended");
          if (line == "y" || line == "n") {
            values.push_back(line == "y");
            break;
          }
        }
      }
      return values;
    });
  } else if (ranked) {
    std::set<NamedTriple> truth;
    for (const auto& [t, label] : LoadTruth(f.labels)) {
      if (IsPositive(label)) truth.insert(t);
    }
    oracle = AnnotationOracle::FromTruth(*ranked, truth);
    exact = AnnotationOracle::FromTruth(*ranked, truth);
  } else {
    const auto labels = ReadStreamLabels(f.labels);
    oracle = AnnotationOracle::FromLabels(labels);
    exact = AnnotationOracle::FromLabels(labels);
  }
  const std::size_t m = oracle->size();
  const int last_fit = LastCheckpoint(params.alpha, m);
  const int last = f.checkpoints >= 0 ? std::min(f.checkpoints, last_fit) : last_fit;
  if (last < params.ell()) {
    throw ConfigError("no checkpoint between ell = " + std::to_string(params.ell()) +
                      " and the " + std::to_string(m) + " ranked predictions");
  }
  const auto rows = BoundsTable(*oracle, params, last, exact ? &*exact : nullptr);

  auto report = OpenOutput(f.report.empty() ? "bounds.csv" : f.report);
  report << "k,y_k,L,U,L_hat,U_hat,prc,queries\n";
  json summary{{"alpha", params.alpha},
               {"delta", params.delta},
               {"ytilde", params.ytilde},
               {"ell", params.ell()},
               {"predictions", m}};
  json checkpoints = json::array();
  bool sandwich = true, ratio = true;
  for (const auto& row : rows) {
    report << row.k << ',' << row.yield << ',' << Real(ToDouble(row.lower)) << ','
           << Real(ToDouble(row.upper)) << ',' << Real(ToDouble(row.lower_hat)) << ','
           << Real(ToDouble(row.upper_hat)) << ','
           << (row.exact ? Real(ToDouble(*row.exact)) : std::string()) << ','
           << row.queries << '\n';
    const auto verdict = CheckRatio(row, params);
    json entry{{"k", row.k},
               {"y_k", row.yield},
               {"queries", row.queries},
               {"query_budget", QueryBudget(params, row.k)},
               {"ratio", !verdict.determinate ? "indeterminate"
                         : verdict.holds      ? "holds"
                                              : "violated"},
               {"ratio_exact", verdict.exact}};
    ratio = ratio && (!verdict.determinate || verdict.holds);
    if (row.exact) {
      const bool inside = row.lower_hat <= *row.exact && *row.exact <= row.upper_hat;
      entry["sandwich"] = inside;
      sandwich = sandwich && inside;
    }
    checkpoints.push_back(entry);
  }
  summary["checkpoints"] = checkpoints;
  summary["ratio_holds"] = ratio;
  if (exact) {
    summary["sandwich_holds"] = sandwich;
    json decomposition = json::array();
    bool all = true;
    for (const auto& row : rows) {
      if (row.yield % params.delta != 0) continue;
      const bool ok = DecompositionCheck(*exact, row.yield, params.delta);
      all = all && ok;
      decomposition.push_back({{"y", row.yield}, {"holds", ok}});
    }
    summary["decomposition"] = decomposition;
    summary["decomposition_holds"] = all;
    const auto onset = FindMonotonicityOnset(*exact, params.delta);
    summary["monotonicity_onset"] = {{"ytilde", onset.ytilde}, {"monotone", onset.monotone}};
    if (!f.curve.empty()) {
      auto curve = OpenOutput(f.curve);
      curve << "y,prc\n";
      for (std::size_t y = params.delta; y <= m; y += params.delta) {
        curve << y << ',' << Real(ToDouble(PrecisionAtYield(*exact, y))) << '\n';
      }
    }
  }
  if (!f.summary.empty()) {
    auto file = OpenOutput(f.summary);
    file << summary.dump(2) << '\n';
  }
  out << summary.dump(2) << '\n';
  return kExitOk;
}

struct ActiveFlags {
  std::string entity, mode, selection, truth, report;
  std::size_t budget = 0;
  CLI::Option* budget_option = nullptr;
  bool interactive = false;
};

int CmdActive(const DataFlags& data, const TrainFlags& train, const ActiveFlags& f,
              std::istream& in, std::ostream& out) {
  RunConfig c = data.Resolve();
  train.Apply(c);
  if (!f.mode.empty()) c.active = EpisodeConfigFromJson(json{{"mode", f.mode}}, c.active);
  if (!f.selection.empty()) {
    c.active = EpisodeConfigFromJson(json{{"selection", f.selection}}, c.active);
  }
  if (f.budget_option->count()) c.active.budget = f.budget;
  if (f.entity.empty()) throw ConfigError("--entity is required");
  if (!f.interactive && f.truth.empty()) {
    throw ConfigError("--truth or --interactive is required");
  }
  ServiceContext context = BuildServiceContext(c);
  std::unique_ptr<Annotator> annotator;
  if (f.interactive) {
    annotator = std::make_unique<InteractiveAnnotator>(in, out);
  } else {
    annotator = std::make_unique<TruthAnnotator>(LoadTruth(f.truth));
  }
  const auto report = RunEpisode(f.entity, context.kb, context.background,
                                 context.snapshot, context.config, *annotator);
  const fs::path path = f.report.empty() ? c.output_dir / "episode.json" : fs::path(f.report);
  auto file = OpenOutput(path);
  file << report.ToJson().dump(2) << '\n';
  out << "annotation " << report.from_annotation << ", sibling-agreement "
      << report.from_sibling_agreement << ", factorization " << report.from_factorization
      << ", total " << report.total << "; report " << path.string() << "\n";
  return kExitOk;
}

HttpServer* g_server = nullptr;

void StopServer(int) {
  if (g_server) g_server->Stop();
}

int CmdServe(const DataFlags& data, const std::string& host, int port, std::ostream& out) {
  RunConfig c = data.Resolve();
  SessionService service(BuildServiceContext(c), c.output_dir);
  HttpServer server(service);
  g_server = &server;
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  out << "serving on " << host << ":" << port << ", state in " << c.output_dir.string()
      << std::endl;
  const bool ok = server.Listen(host, port);
  g_server = nullptr;
  if (!ok && port != 0) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return kExitOk;
}

int CmdSynth(const std::string& dir, std::uint64_t seed, std::ostream& out) {
  const std::string entity = WriteFixture(dir, seed);
  out << "fixture in " << dir << ", new entity " << entity << "\n";
  return kExitOk;
}

}  // namespace

ServiceContext BuildServiceContext(const RunConfig& c) {
  ServiceContext context;
  context.kb = LoadKbOf(c);
  context.background = LoadBackgroundOf(c);
  context.config = c.active;
  context.config.train = c.train;
  context.config.Validate();
  if (!c.model.empty()) {
    if (!fs::exists(c.model)) throw ConfigError("model not found: " + c.model.string());
    context.snapshot = LoadModel(c.model);
  } else {
    context.snapshot = Train(context.kb, context.background.types, c.train).model;
  }
  return context;
}

void WritePredictionsCsv(const EmbeddingModel& model,
                         const std::vector<ScoredTriple>& ranked, std::ostream& out) {
  out << "source,relation,target,score,probability\n";
  for (const auto& p : ranked) {
    const auto t = NamesOf(model, p.triple);
    out << CsvField(t.source) << ',' << CsvField(t.relation) << ',' << CsvField(t.target)
        << ',' << Real(p.score) << ',' << Real(p.probability) << '\n';
  }
}

RankedPredictions ReadPredictionsCsv(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t n = 0;
  std::vector<RankedEntry> entries;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || n == 1) continue;
    const auto fields = SplitCsvLine(line);
    if (fields.size() != 5) {
      throw ParseError(source_name, n, "expected 5 comma-separated fields");
    }
    try {
      entries.push_back({{fields[0], fields[1], fields[2]}, std::stod(fields[3])});
    } catch (const std::exception&) {
      throw ParseError(source_name, n, "bad score '" + fields[3] + "'");
    }
  }
  return RankedPredictions(std::move(entries));
}

std::string WriteFixture(const fs::path& dir, std::uint64_t seed) {
  synthetic::SiblingWorldConfig wc;
  wc.categories = 2;
  wc.children_per_category = 6;
  wc.relations = 3;
  wc.target_groups = 16;
  wc.traits = 3;
  wc.seed = seed;
  const auto world = synthetic::MakeSiblingWorld(wc);
  fs::create_directories(dir);
  {
    auto f = OpenOutput(dir / "kb.tsv");
    WriteKb(world.kb, f);
  }
  {
    auto f = OpenOutput(dir / "taxonomy.tsv");
    WriteTaxonomy(world.background.taxonomy, f);
  }
  {
    auto f = OpenOutput(dir / "typemap.tsv");
    WriteTypeMap(world.background.types, f);
  }
  {
    auto f = OpenOutput(dir / "schema.tsv");
    WriteSchema(world.background.schema, f);
  }
  {
    auto f = OpenOutput(dir / "truth.tsv");
    for (const auto& [t, label] : world.truth) {
      f << t.source << '\t' << t.relation << '\t' << t.target << '\t' << ToString(label)
        << '\n';
    }
  }
  RunConfig config;
  config.kb = "kb.tsv";
  config.taxonomy = "taxonomy.tsv";
  config.typemap = "typemap.tsv";
  config.schema = "schema.tsv";
  config.output_dir = "out";
  config.seed = seed;
  config.train.dim = 16;
  config.train.epochs = 100;
  config.train.l2 = 0.02;
  config.active.budget = 4;
  config.active.weights.redundancy = 0.01;
  config.estimator = {2.0, 8, 8};
  config.PropagateSeed();
  json j = ToJson(config);
  j.erase("model");
  {
    auto f = OpenOutput(dir / "config.json");
    f << j.dump(2) << '\n';
  }
  {
    auto f = OpenOutput(dir / "entity.txt");
    f << world.new_entity << '\n';
  }
  return world.new_entity;
}

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Generics knowledge-base completion"};
  app.name("genkb");
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");

  DataFlags split_data, train_data, expand_data, predict_data, active_data, serve_data;
  TrainFlags train_flags, active_train;
  std::string model_out, rules, derived_out, entity, predictions_out, host = "127.0.0.1",
                                                                     synth_dir = "data/fixture";
  bool expand = false;
  std::size_t top_k = 0;
  int port = 8080;
  std::uint64_t synth_seed = 1;
  EvalFlags eval;
  ActiveFlags active;

  auto* split = app.add_subcommand("split", "3/1/1 train/validation/test split");
  split_data.Add(split);

  auto* train = app.add_subcommand("train", "train a model");
  train_data.Add(train);
  train_flags.Add(train);
  train->add_option("--out", model_out, "model output path");
  train->add_flag("--expand", expand, "expand with the taxonomy rules, then train");

  auto* expand_cmd = app.add_subcommand("expand", "derive triples with the taxonomy rules");
  expand_data.Add(expand_cmd);
  expand_cmd->add_option("--rules", rules, "comma-separated rules, all or none");
  expand_cmd->add_option("--out", derived_out, "derived triples TSV");

  auto* predict = app.add_subcommand("predict", "rank schema-consistent new triples");
  predict_data.Add(predict);
  predict->add_option("--entity", entity, "only triples about this entity");
  predict->add_option("--top-k", top_k, "keep the best k (0 keeps all)");
  predict->add_option("--out", predictions_out, "predictions CSV");

  auto* eval_cmd = app.add_subcommand("eval", "precision-at-yield bounds");
  eval_cmd->add_option("--labels", eval.labels, "truth TSV, 0/1 stream, or 'interactive'")
      ->required();
  eval_cmd->add_option("--predictions", eval.predictions, "predictions CSV");
  eval_cmd->add_option("--config", eval.config, "JSON run config supplying the estimator");
  eval.alpha_option = eval_cmd->add_option("--alpha", eval.alpha, "checkpoint ratio (2)");
  eval.delta_option = eval_cmd->add_option("--delta", eval.delta, "window size (64)");
  eval.ytilde_option =
      eval_cmd->add_option("--ytilde", eval.ytilde, "monotonicity onset (default delta)");
  eval_cmd->add_option("--checkpoints", eval.checkpoints, "last checkpoint k");
  eval_cmd->add_option("--out", eval.report, "bounds CSV");
  eval_cmd->add_option("--curve", eval.curve, "precision-yield CSV");
  eval_cmd->add_option("--summary", eval.summary, "summary JSON");

  auto* active_cmd = app.add_subcommand("active", "run one active-learning episode");
  active_data.Add(active_cmd);
  active_train.Add(active_cmd);
  active_cmd->add_option("--entity", active.entity, "new entity")->required();
  active_cmd->add_option("--mode", active.mode, "random, schema-consistent, sibling-guided");
  active_cmd->add_option("--selection", active.selection, "submodular or top-k");
  active.budget_option = active_cmd->add_option("--budget", active.budget, "queries");
  active_cmd->add_option("--truth", active.truth, "ground-truth TSV answering queries");
  active_cmd->add_flag("--interactive", active.interactive, "answer queries on stdin");
  active_cmd->add_option("--out", active.report, "episode report JSON");

  auto* serve = app.add_subcommand("serve", "HTTP session API");
  serve_data.Add(serve);
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port");

  auto* synth = app.add_subcommand("synth", "write the synthetic fixture");
  synth->add_option("--out", synth_dir, "fixture directory");
  synth->add_option("--seed", synth_seed, "world seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::warn);

  try {
    if (*split) return CmdSplit(split_data, out);
    if (*train) return CmdTrain(train_data, train_flags, expand, model_out, out);
    if (*expand_cmd) return CmdExpand(expand_data, rules, derived_out, out);
    if (*predict) return CmdPredict(predict_data, entity, top_k, predictions_out, out);
    if (*eval_cmd) return CmdEval(eval, in, out);
    if (*active_cmd) return CmdActive(active_data, active_train, active, in, out);
    if (*serve) return CmdServe(serve_data, host, port, out);
    if (*synth) return CmdSynth(synth_dir, synth_seed, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace genkb
