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

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "genkb/guidance/schema_check.h"
#include "genkb/service/commands.h"
#include "genkb/service/http_server.h"
#include "httplib.h"

namespace genkb {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("genkb_" + name + "_" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

// One fixture shared by the suite; every test writes under its own dir.
class Fixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new fs::path(FreshDir("fixture"));
    entity_ = new std::string(WriteFixture(*dir_, 1));
    config_ = new RunConfig(LoadRunConfig(*dir_ / "config.json"));
    context_ = new ServiceContext(BuildServiceContext(*config_));
  }
  static void TearDownTestSuite() {
    fs::remove_all(*dir_);
    delete context_;
    delete config_;
    delete entity_;
    delete dir_;
  }
  static fs::path* dir_;
  static std::string* entity_;
  static RunConfig* config_;
  static ServiceContext* context_;

  static std::map<std::string, QuantLabel> AnswerAll(const SessionRecord& r) {
    std::map<std::string, QuantLabel> labels;
    for (std::size_t index : r.session.selected) {
      labels[QuerySession::FactId(index)] = QuantLabel::kAll;
    }
    return labels;
  }
};

fs::path* Fixture::dir_ = nullptr;
std::string* Fixture::entity_ = nullptr;
RunConfig* Fixture::config_ = nullptr;
ServiceContext* Fixture::context_ = nullptr;

TEST(SessionStatusTest, OnlyForwardSingleSteps) {
  const SessionStatus order[] = {SessionStatus::kProposing, SessionStatus::kAwaitingAnnotation,
                                 SessionStatus::kRefitting, SessionStatus::kDone};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(IsAllowedTransition(order[i], order[j]), j == i || j == i + 1)
          << i << "->" << j;
    }
    EXPECT_EQ(ParseSessionStatus(ToString(order[i])), order[i]);
  }
  EXPECT_FALSE(ParseSessionStatus("finished"));
}

TEST(RunConfigTest, ParsesResolvesAndRejects) {
  const json j = {{"kb", "kb.tsv"},
                  {"output_dir", "/out"},
                  {"taxonomy", "/abs/tax.tsv"},
                  {"seed", 7},
                  {"train", {{"dim", 12}, {"loss", "multiclass"}}},
                  {"active", {{"budget", 3}, {"mode", "random"}}},
                  {"estimator", {{"alpha", 1.5}, {"delta", 16}, {"ytilde", 32}}}};
  const RunConfig c = RunConfigFromJson(j, "/base");
  EXPECT_EQ(c.kb, fs::path("/base/kb.tsv"));
  EXPECT_EQ(c.taxonomy, fs::path("/abs/tax.tsv"));
  EXPECT_EQ(c.train.dim, 12u);
  EXPECT_EQ(c.train.seed, 7u);
  EXPECT_EQ(c.active.seed, 7u);
  EXPECT_EQ(c.active.budget, 3u);
  EXPECT_EQ(c.active.mode, ProposalMode::kRandom);
  EXPECT_EQ(c.estimator.delta, 16u);
  EXPECT_EQ(RunConfigFromJson(ToJson(c), "/elsewhere"), c);
  EXPECT_THROW(RunConfigFromJson({{"kbb", "x"}}, "/"), ConfigError);
  EXPECT_THROW(RunConfigFromJson({{"train", {{"dim", "big"}}}}, "/"), ConfigError);
  EXPECT_THROW(RunConfigFromJson({{"active", {{"mode", "psychic"}}}}, "/"), ConfigError);
}

TEST(RunConfigTest, EnvironmentOverridesOutputDir) {
  RunConfig c;
  ::setenv(kOutputDirEnv, "/tmp/genkb-env-out", 1);
  ApplyEnvironment(c);
  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(c.output_dir, fs::path("/tmp/genkb-env-out"));
}

TEST(RunConfigTest, MissingFilesAreConfigErrors) {
  RunConfig c;
  c.kb = "/nonexistent/kb.tsv";
  try {
    c.Validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("not found"), std::string::npos);
  }
}

TEST(PredictionsCsvTest, ReadsQuotedFieldsAndRejectsBadRows) {
  std::istringstream in(
      "source,relation,target,score,probability\n"
      "a,r,\"b,c\",0.5,0.6\n"
      "x,r,y,2.5,0.9\n");
  const auto ranked = ReadPredictionsCsv(in, "p.csv");
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked.at(1).triple, (NamedTriple{"x", "r", "y"}));
  EXPECT_EQ(ranked.at(2).triple.target, "b,c");
  std::istringstream bad("h\na,b,c\n");
  EXPECT_THROW(ReadPredictionsCsv(bad, "bad.csv"), ParseError);
}

TEST_F(Fixture, RoundTripProducesFactorizationFacts) {
  const fs::path out = FreshDir("roundtrip");
  SessionService service(*context_, out);
  auto record = service.Create(*entity_);
  EXPECT_EQ(record.status, SessionStatus::kAwaitingAnnotation);
  ASSERT_FALSE(record.session.selected.empty());
  EXPECT_LE(record.session.selected.size(), config_->active.budget);
  EXPECT_TRUE(fs::exists(out / "sessions" / (record.id + ".json")));

  const auto labels = AnswerAll(record);
  EXPECT_TRUE(service.Annotate(record.id, labels).changed);
  EXPECT_FALSE(service.Annotate(record.id, labels).changed);
  record = service.RequestRefit(record.id);
  EXPECT_EQ(record.status, SessionStatus::kRefitting);
  service.WaitIdle();
  record = service.Get(record.id);
  ASSERT_EQ(record.status, SessionStatus::kDone) << record.error;

  const auto inferred = service.Inferred(record.id);
  ASSERT_FALSE(inferred.empty());
  bool factorization = false;
  for (const auto& f : inferred) {
    factorization = factorization || f.provenance == Provenance::kFactorization;
    EXPECT_TRUE(SchemaConsistent(f.triple, context_->background.schema,
                                 context_->background.types)
                    .consistent);
  }
  EXPECT_TRUE(factorization);
  EXPECT_EQ(service.RequestRefit(record.id).status, SessionStatus::kDone);
  EXPECT_THROW(service.Annotate(record.id, labels), ConflictError);
  fs::remove_all(out);
}

TEST_F(Fixture, ErrorsBeforeAnythingChanges) {
  const fs::path out = FreshDir("errors");
  SessionService service(*context_, out);
  EXPECT_THROW(service.Get("nope"), NotFoundError);
  EXPECT_THROW(service.Create(""), BadRequestError);
  EXPECT_THROW(service.Create("unheard_of"), BadRequestError);
  auto record = service.Create(*entity_);
  EXPECT_THROW(service.Inferred(record.id), ConflictError);
  try {
    service.RequestRefit(record.id);
    FAIL();
  } catch (const PendingAnnotationsError& e) {
    EXPECT_EQ(e.pending(), record.session.selected.size());
  }
  EXPECT_THROW(service.Annotate(record.id, {{"q999999", QuantLabel::kAll}}),
               BadRequestError);
  EXPECT_TRUE(service.Get(record.id).session.annotations.empty());
  EXPECT_EQ(service.List().size(), 1u);
  fs::remove_all(out);
}

TEST_F(Fixture, ColdEntityCreatesNoSession) {
  ServiceContext context = *context_;
  // Strip every fact of the new entity's siblings.
  KnowledgeBase kb;
  const auto siblings = context.background.taxonomy.Siblings(*entity_);
  for (const auto& lt : context.kb.Canonical()) {
    if (!siblings.count(lt.triple.source) && !siblings.count(lt.triple.target)) {
      kb.Add(lt.triple, lt.label);
    }
  }
  context.kb = kb;
  const fs::path out = FreshDir("cold");
  SessionService service(context, out);
  EXPECT_THROW(service.Create(*entity_), ColdEntityError);
  EXPECT_TRUE(service.List().empty());
  EXPECT_TRUE(fs::is_empty(out / "sessions"));
  fs::remove_all(out);
}

TEST_F(Fixture, ResumesProposingAndRefittingSessions) {
  const fs::path out = FreshDir("resume");
  std::string answered_id;
  SessionRecord proposing;
  {
    SessionService service(*context_, out);
    auto record = service.Create(*entity_);
    service.Annotate(record.id, AnswerAll(record));
    answered_id = record.id;
    proposing = service.Create(*entity_, ProposalMode::kSchemaConsistent, 2);
  }
  // Simulate a crash mid-refit and mid-proposal by rewriting the records.
  SessionStore store(out);
  auto records = store.LoadAll();
  ASSERT_EQ(records.size(), 2u);
  records[answered_id].status = SessionStatus::kRefitting;
  store.Save(records[answered_id]);
  auto& p = records[proposing.id];
  p.status = SessionStatus::kProposing;
  p.session.selected.clear();
  p.session.candidates.clear();
  store.Save(p);

  SessionService resumed(*context_, out);
  resumed.WaitIdle();
  EXPECT_EQ(resumed.Get(answered_id).status, SessionStatus::kDone);
  EXPECT_FALSE(resumed.Inferred(answered_id).empty());
  const auto re = resumed.Get(proposing.id);
  EXPECT_EQ(re.status, SessionStatus::kAwaitingAnnotation);
  EXPECT_EQ(re.session.selected, proposing.session.selected);
  EXPECT_EQ(re.session.mode, ProposalMode::kSchemaConsistent);
  fs::remove_all(out);
}

TEST_F(Fixture, StoreWritesWholeFilesOnly) {
  const fs::path out = FreshDir("atomic");
  SessionService service(*context_, out);
  const auto record = service.Create(*entity_);
  for (const auto& entry : fs::directory_iterator(out / "sessions")) {
    EXPECT_EQ(entry.path().extension(), ".json") << entry.path();
  }
  const auto loaded = SessionRecordFromJson(json::parse(Slurp(out / "sessions" / (record.id + ".json"))));
  EXPECT_EQ(loaded, record);
  std::ofstream(out / "sessions" / "broken.json") << "{\"id\":";
  EXPECT_THROW(SessionStore(out).LoadAll(), ParseError);
  fs::remove_all(out);
}

class HttpFixture : public Fixture {
 protected:
  void SetUp() override {
    out_ = FreshDir("http");
    service_ = std::make_unique<SessionService>(*context_, out_);
    server_ = std::make_unique<HttpServer>(*service_);
    port_ = server_->BindToAnyPort("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->ListenAfterBind(); });
    while (!server_->IsRunning()) std::this_thread::yield();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_->Stop();
    thread_.join();
    service_->WaitIdle();
    fs::remove_all(out_);
  }
  std::pair<int, json> Post(const std::string& path, const std::string& body) {
    auto res = client_->Post(path, body, "application/json");
    return {res->status, json::parse(res->body)};
  }
  std::pair<int, json> Get(const std::string& path) {
    auto res = client_->Get(path);
    return {res->status, json::parse(res->body)};
  }

  fs::path out_;
  std::unique_ptr<SessionService> service_;
  std::unique_ptr<HttpServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpFixture, FullLifecycle) {
  auto [code, created] = Post("/sessions", json{{"entity", *entity_}}.dump());
  ASSERT_EQ(code, 201);
  const std::string id = created["session_id"];
  EXPECT_EQ(created["status"], "awaiting-annotation");
  EXPECT_EQ(created["label_options"], json({"all", "some", "none"}));
  ASSERT_FALSE(created["questions"].empty());
  EXPECT_EQ(created["pending"], created["questions"].size());

  auto [refit_early, body] = Post("/sessions/" + id + "/refit", "");
  EXPECT_EQ(refit_early, 409);
  EXPECT_EQ(body["pending"], created["questions"].size());

  json answers = json::object();
  for (const auto& q : created["questions"]) {
    EXPECT_TRUE(q["answer"].is_null());
    EXPECT_NE(q["question"].get<std::string>().find(*entity_), std::string::npos);
    answers[q["fact_id"].get<std::string>()] = "some";
  }
  auto [a1, first] = Post("/sessions/" + id + "/annotations", answers.dump());
  EXPECT_EQ(a1, 200);
  EXPECT_TRUE(first["changed"]);
  EXPECT_EQ(first["pending"], 0);
  auto [a2, second] = Post("/sessions/" + id + "/annotations", answers.dump());
  EXPECT_EQ(a2, 200);
  EXPECT_FALSE(second["changed"]);
  EXPECT_EQ(Get("/sessions/" + id).second["questions"], first["questions"]);

  EXPECT_EQ(Post("/sessions/" + id + "/refit", "").first, 202);
  service_->WaitIdle();
  auto [g, done] = Get("/sessions/" + id);
  EXPECT_EQ(g, 200);
  EXPECT_EQ(done["status"], "done");
  EXPECT_EQ(Post("/sessions/" + id + "/refit", "").first, 200);
  auto [i, inferred] = Get("/sessions/" + id + "/inferred");
  EXPECT_EQ(i, 200);
  ASSERT_FALSE(inferred["inferred"].empty());
  for (const auto& f : inferred["inferred"]) {
    const NamedTriple t{f["source"], f["relation"], f["target"]};
    EXPECT_TRUE(SchemaConsistent(t, context_->background.schema, context_->background.types)
                    .consistent);
  }
  EXPECT_EQ(Post("/sessions/" + id + "/annotations", answers.dump()).first, 409);
  auto [l, list] = Get("/sessions");
  EXPECT_EQ(l, 200);
  EXPECT_EQ(list["sessions"].size(), 1u);
}

TEST_F(HttpFixture, ErrorStatuses) {
  EXPECT_EQ(Get("/sessions/unknown").first, 404);
  EXPECT_EQ(Post("/sessions/unknown/refit", "").first, 404);
  EXPECT_EQ(Get("/sessions/unknown/inferred").first, 404);
  EXPECT_EQ(Post("/sessions", "not json").first, 400);
  EXPECT_EQ(Post("/sessions", "{}").first, 400);
  EXPECT_EQ(Post("/sessions", json{{"entity", *entity_}, {"mode", "psychic"}}.dump()).first, 400);
  EXPECT_EQ(Post("/sessions", json{{"entity", *entity_}, {"budget", -1}}.dump()).first, 400);
  auto [code, created] = Post("/sessions", json{{"entity", *entity_}}.dump());
  ASSERT_EQ(code, 201);
  const std::string id = created["session_id"];
  const std::string fact = created["questions"][0]["fact_id"];
  EXPECT_EQ(Post("/sessions/" + id + "/annotations", json{{fact, "maybe"}}.dump()).first, 400);
  EXPECT_EQ(Post("/sessions/" + id + "/annotations", json{{fact, 1}}.dump()).first, 400);
  EXPECT_EQ(Post("/sessions/" + id + "/annotations", "[1]").first, 400);
  EXPECT_EQ(Post("/sessions/" + id + "/annotations", json{{"q424242", "all"}}.dump()).first, 400);
  EXPECT_EQ(Get("/sessions/" + id + "/inferred").first, 409);
  EXPECT_EQ(Get("/sessions/" + id).second["pending"], created["questions"].size());
  EXPECT_EQ(Get("/health").first, 200);
}

TEST_F(Fixture, ColdEntityIs422WithFallback) {
  ServiceContext context = *context_;
  KnowledgeBase kb;
  const auto siblings = context.background.taxonomy.Siblings(*entity_);
  for (const auto& lt : context.kb.Canonical()) {
    if (!siblings.count(lt.triple.source) && !siblings.count(lt.triple.target)) {
      kb.Add(lt.triple, lt.label);
    }
  }
  context.kb = kb;
  const fs::path out = FreshDir("cold_http");
  SessionService service(context, out);
  HttpServer server(service);
  const int port = server.BindToAnyPort("127.0.0.1");
  std::thread t([&] { server.ListenAfterBind(); });
  while (!server.IsRunning()) std::this_thread::yield();
  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/sessions", json{{"entity", *entity_}}.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
  EXPECT_EQ(json::parse(res->body)["fallback"], "schema-consistent");
  auto ok = client.Post("/sessions",
                        json{{"entity", *entity_}, {"mode", "schema-consistent"}}.dump(),
                        "application/json");
  EXPECT_EQ(ok->status, 201);
  server.Stop();
  t.join();
  fs::remove_all(out);
}

TEST_F(Fixture, CliExitCodes) {
  EXPECT_EQ(Cli({}).code, kExitConfig);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(Cli({"train", "--kb", "/nonexistent.tsv"}).code, kExitConfig);
  EXPECT_EQ(Cli({"train", "--config", "/nonexistent.json"}).code, kExitConfig);
  const auto missing = Cli({"predict", "--config", (*dir_ / "config.json").string(), "--model",
                            (*dir_ / "absent.bin").string()});
  EXPECT_EQ(missing.code, kExitConfig);
  EXPECT_NE(missing.err.find("model not found"), std::string::npos);
  EXPECT_EQ(Cli({"eval", "--labels", "/nonexistent"}).code, kExitConfig);
  EXPECT_EQ(Cli({"train", "--config", (*dir_ / "config.json").string(), "--dim", "0"}).code,
            kExitConfig);
}

TEST_F(Fixture, CliPipelineIsByteIdenticalAcrossRuns) {
  const std::string config = (*dir_ / "config.json").string();
  std::vector<std::string> outputs[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = *dir_ / ("det" + std::to_string(run));
    const std::string o = out.string();
    ASSERT_EQ(Cli({"split", "--config", config, "--output-dir", o + "/split"}).code, 0);
    ASSERT_EQ(Cli({"train", "--config", config, "--out", o + "/model.bin"}).code, 0);
    ASSERT_EQ(Cli({"predict", "--config", config, "--model", o + "/model.bin", "--out",
                   o + "/predictions.csv"})
                  .code,
              0);
    ASSERT_EQ(Cli({"active", "--config", config, "--model", o + "/model.bin", "--entity",
                   *entity_, "--truth", (*dir_ / "truth.tsv").string(), "--out",
                   o + "/episode.json"})
                  .code,
              0);
    for (const char* f : {"split/train.tsv", "split/validation.tsv", "split/test.tsv",
                          "model.bin", "predictions.csv", "episode.json"}) {
      outputs[run].push_back(Slurp(out / f));
      EXPECT_FALSE(outputs[run].back().empty()) << f;
    }
  }
  EXPECT_EQ(outputs[0], outputs[1]);
}

TEST_F(Fixture, PredictEmitsOnlySchemaConsistentTriples) {
  const std::string config = (*dir_ / "config.json").string();
  const fs::path out = *dir_ / "predict";
  ASSERT_EQ(Cli({"train", "--config", config, "--out", (out / "model.bin").string()}).code, 0);
  ASSERT_EQ(Cli({"predict", "--config", config, "--model", (out / "model.bin").string(), "--out",
                 (out / "p.csv").string()})
                .code,
            0);
  std::ifstream in(out / "p.csv");
  const auto ranked = ReadPredictionsCsv(in, "p.csv");
  ASSERT_GT(ranked.size(), 0u);
  for (std::size_t r = 1; r <= ranked.size(); ++r) {
    EXPECT_TRUE(SchemaConsistent(ranked.at(r).triple, context_->background.schema,
                                 context_->background.types)
                    .consistent);
    if (r > 1) {
      EXPECT_GE(ranked.at(r - 1).score, ranked.at(r).score);
    }
  }
}

TEST_F(Fixture, EvalReportsBoundsOnLabelStream) {
  const fs::path out = *dir_ / "eval";
  fs::create_directories(out);
  {
    std::ofstream labels(out / "labels.txt");
    for (int i = 0; i < 256; ++i) labels << (i % 4 != 3 ? 1 : 0) << '\n';
  }
  const auto r = Cli({"eval", "--labels", (out / "labels.txt").string(), "--alpha", "2",
                      "--delta", "4", "--ytilde", "4", "--out", (out / "b.csv").string(),
                      "--summary", (out / "s.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const json s = json::parse(Slurp(out / "s.json"));
  EXPECT_TRUE(s["sandwich_holds"]);
  EXPECT_TRUE(s["ratio_holds"]);
  EXPECT_TRUE(s["decomposition_holds"]);
  const std::string csv = Slurp(out / "b.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,y_k,L,U,L_hat,U_hat,prc,queries");
  // Every window holds three trues: 64 windows of precision 3/4.
  EXPECT_NE(csv.find("\n8,256,48,48,0.75,0.75,0.75,28\n"), std::string::npos) << csv;
}

TEST_F(Fixture, EvalInteractiveAsksOnlyBudgetedQueries) {
  const fs::path out = *dir_ / "eval_interactive";
  fs::create_directories(out);
  {
    std::ofstream p(out / "p.csv");
    p << "source,relation,target,score,probability\n";
    for (int i = 0; i < 64; ++i) p << "e" << i << ",r,t," << 100 - i << ",0.5\n";
  }
  std::string answers;
  for (int i = 0; i < 64; ++i) answers += "y\n";
  const auto r = Cli({"eval", "--labels", "interactive", "--predictions",
                      (out / "p.csv").string(), "--delta", "8", "--ytilde", "8", "--out",
                      (out / "b.csv").string()},
                     answers);
  ASSERT_EQ(r.code, 0) << r.err;
  const json s = json::parse(r.out.substr(r.out.find('{', r.out.rfind("[y/n]"))));
  EXPECT_EQ(s["checkpoints"].back()["queries"], 32);
  EXPECT_TRUE(s["ratio_holds"]);
}

TEST_F(Fixture, RepositoryFixtureMatchesGenerator) {
  const fs::path repo = fs::path(GENKB_SOURCE_DIR) / "data" / "fixture";
  for (const char* f : {"kb.tsv", "taxonomy.tsv", "typemap.tsv", "schema.tsv", "truth.tsv",
                        "config.json", "entity.txt"}) {
    EXPECT_EQ(Slurp(repo / f), Slurp(*dir_ / f)) << f;
  }
}

}  // namespace
}  // namespace genkb
