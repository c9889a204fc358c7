/*
 * Copyright 2026 The tracerank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance checks for the tracerank engine. Prints one PASS/FAIL/SKIP line
// per criterion and exits non-zero when any check fails.
//
//   tracerank_acceptance               all checks; the public-dataset check
//                                      runs on a generated proxy corpus
//   tracerank_acceptance --easyclinic  only the public-dataset check, on the
//                                      corpus named by TRACERANK_EASYCLINIC_DIR
//                                      (a directory holding dataset.txt);
//                                      exits 77 when that is unset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.h"
#include "tracerank/cli.h"
#include "tracerank/corpus.h"
#include "tracerank/embedding.h"
#include "tracerank/error.h"
#include "tracerank/evaluation.h"
#include "tracerank/experiment.h"
#include "tracerank/io_util.h"
#include "tracerank/rerank.h"

namespace tracerank {
namespace {

using testing::BruteForceCliffs;
using testing::BruteForceWilcoxonP;
using testing::DataDir;
using testing::FilesIdentical;
using testing::MakeRandomScenario;
using testing::MakeWorkedExample;
using testing::RandomScenario;
using testing::ReferenceAveragePrecision;
using testing::TempDir;

constexpr int kExitSkip = 77;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (condition) return;
    if (failures_ == 0) first_ = what;
    ++failures_;
  }
  Outcome Finish(const std::string& ok_detail) const {
    if (failures_ == 0) return {true, ok_detail};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Fixed(double value, int digits = 3) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

double ScoreOf(const RankedList& list, const std::string& id) {
  for (const auto& entry : list.entries) {
    if (entry.id == id) return entry.score;
  }
  return std::nan("");
}

// Randomized corpora shared by the reranking checks.
struct RandomCase {
  RandomScenario scenario;
  RewardConfig config;
};

const std::vector<RandomCase>& RandomCases() {
  static const std::vector<RandomCase> cases = [] {
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<std::size_t> sources(1, 5);
    std::uniform_int_distribution<std::size_t> targets(2, 12);
    std::uniform_int_distribution<int> percent(1, 100);
    std::vector<RandomCase> out;
    for (int i = 0; i < 1000; ++i) {
      RandomCase c;
      c.scenario = MakeRandomScenario(rng, sources(rng), targets(rng), 4);
      c.config.k1 = percent(rng) / 100.0;
      c.config.k2 = percent(rng) / 100.0;
      out.push_back(std::move(c));
    }
    return out;
  }();
  return cases;
}

Outcome RewardOracle() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;

  // Nine targets; TA7 counted 3 times, TA5 and TA8 once each.
  const auto example = MakeWorkedExample();
  RewardConfig config;
  config.k1 = 0.25;
  config.k2 = 0.25;
  const auto counts = BuildCountTable(example.ta_lists, config);
  check.Expect(counts.count.at("TA7") == 3 && counts.count.at("TA5") == 1 &&
                   counts.count.at("TA8") == 1,
               "worked example counts 3/1/1");
  const auto result =
      ApplyRewards(example.sa_list, example.ta_lists, counts, config);
  const double spec3 = std::log(8.0 / 3.0);
  const double spec1 = std::log(8.0);
  const double w3 = spec3 / (spec3 + spec1);
  const double w1 = spec1 / (spec3 + spec1);
  const std::map<std::string, double> expected = {
      {"TA1", 0.80}, {"TA2", 0.70}, {"TA3", 0.55},
      {"TA4", 0.50}, {"TA5", 0.40 + 0.40 * w1}, {"TA6", 0.35},
      {"TA7", 0.30 + 0.50 * w3}, {"TA8", 0.20 + 0.60 * w1}, {"TA9", 0.10}};
  for (const auto& [id, score] : expected) {
    check.Expect(std::abs(ScoreOf(result.list, id) - score) <= 1e-12,
                 "worked example score of " + id);
  }

  // Four targets from vector files; TA4 is promoted to the top score.
  const auto dir = DataDir() / "promote";
  const std::vector<std::string> sa_ids = {"SA1"};
  const std::vector<std::string> ta_ids = {"TA1", "TA2", "TA3", "TA4"};
  const auto sa = LoadVectors(dir / "sa.vec", sa_ids);
  const auto ta = LoadVectors(dir / "ta.vec", ta_ids);
  const auto sa_list = SaTaLists(SaTaMatrix(sa, ta)).at("SA1");
  const auto ta_lists = TaTaLists(ta);
  const auto promoted = ApplyRewards(sa_list, ta_lists,
                                 BuildCountTable(ta_lists, config), config);
  const double sim_first = 0.9578262852211513;
  check.Expect(promoted.trace.size() == 1 &&
                   std::abs(promoted.trace[0].spec - std::log(3.0)) <= 1e-12,
               "promotion fixture specificity ln 3");
  check.Expect(std::abs(ScoreOf(promoted.list, "TA4") - sim_first) <= 1e-12,
               "TA4 raised to Sim_first");
  check.Expect(promoted.list.entries[1].id == "TA4", "TA4 at rank 2");

  const double elapsed = Seconds(start);
  check.Expect(elapsed < 1.0, "runtime " + Fixed(elapsed) + " s >= 1 s");
  return check.Finish("hand values within 1e-12 in " + Fixed(elapsed) + " s");
}

Outcome BoundingAndTopOne() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  std::size_t rows = 0;
  for (const auto& c : RandomCases()) {
    const auto counts = BuildCountTable(c.scenario.ta_lists, c.config);
    for (const auto& [sa_id, list] : c.scenario.sa_lists) {
      const auto result =
          ApplyRewards(list, c.scenario.ta_lists, counts, c.config);
      for (const auto& record : result.trace) {
        ++rows;
        check.Expect(record.sim_origin <= record.sim_new &&
                         record.sim_new <= record.sim_first,
                     "bounding violated for " + sa_id + "/" + record.trta_id);
      }
      const auto& top = list.entries.front();
      const auto& new_top = result.list.entries.front();
      check.Expect(new_top.id == top.id ||
                       (new_top.score == top.score &&
                        ScoreOf(result.list, top.id) == top.score),
                   "top-1 changed for " + sa_id);
    }
  }
  const double elapsed = Seconds(start);
  check.Expect(elapsed < 30.0, "runtime " + Fixed(elapsed) + " s >= 30 s");
  return check.Finish("1000 corpora, " + std::to_string(rows) +
                      " trace rows in " + Fixed(elapsed) + " s");
}

Outcome LogBaseInvariance() {
  Checker check;
  double worst = 0.0;
  for (const auto& c : RandomCases()) {
    RewardConfig base10 = c.config;
    base10.log_base = SpecificityLog::kBase10;
    const auto counts = BuildCountTable(c.scenario.ta_lists, c.config);
    for (const auto& [sa_id, list] : c.scenario.sa_lists) {
      const auto ln = ApplyRewards(list, c.scenario.ta_lists, counts, c.config);
      const auto lg = ApplyRewards(list, c.scenario.ta_lists, counts, base10);
      check.Expect(ln.trace.size() == lg.trace.size(), "trace sizes differ");
      for (std::size_t i = 0; i < ln.trace.size() && i < lg.trace.size(); ++i) {
        const double diff = std::abs(ln.trace[i].sim_new - lg.trace[i].sim_new);
        worst = std::max(worst, diff);
        check.Expect(diff <= 1e-12, "sim_new differs for " + sa_id);
      }
    }
  }
  std::ostringstream detail;
  detail << "max |ln - log10| = " << worst;
  return check.Finish(detail.str());
}

Outcome AblationDegeneracy() {
  Checker check;
  for (const auto& c : RandomCases()) {
    RewardConfig off = c.config;
    off.rewarding_enabled = false;
    const auto counts = BuildCountTable(c.scenario.ta_lists, off);
    for (const auto& [sa_id, list] : c.scenario.sa_lists) {
      const auto result = ApplyRewards(list, c.scenario.ta_lists, counts, off);
      check.Expect(result.list == list && result.trace.empty(),
                   "disabled rewarding changed " + sa_id);
    }
  }
  // The same through the full pipeline on a fixture where rewarding matters.
  RunSpec spec;
  const auto dir = DataDir() / "promote";
  spec.sources = dir / "sources";
  spec.targets = dir / "targets";
  spec.answers = dir / "answers.tsv";
  spec.backend = Backend::kVectors;
  spec.vectors_sa = dir / "sa.vec";
  spec.vectors_ta = dir / "ta.vec";
  spec.reward.rewarding_enabled = false;
  const auto prepared = PrepareRun(spec);
  const auto output = RerankAndEvaluate(prepared, spec.reward, spec);
  check.Expect(output.reordered == prepared.sa_lists,
               "pipeline without rewards reordered the promote lists");
  return check.Finish("1000 corpora plus promote pipeline keep similarity order");
}

Outcome ApMapOracle() {
  std::mt19937_64 rng(4242);
  Checker check;
  RankedLists lists;
  AnswerSet answers;
  std::vector<double> aps;
  for (int trial = 0; aps.size() < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::string owner = "S" + std::to_string(10000 + trial);
    RankedList list{owner, {}};
    std::vector<bool> relevant(n);
    std::set<std::string> gold;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string id = "T" + std::to_string(i);
      list.entries.push_back({id, 1.0 - 0.05 * static_cast<double>(i)});
      relevant[i] = rng() % 3 == 0;
      if (relevant[i]) gold.insert(id);
    }
    // Gold targets that never made the ranking.
    const std::size_t missing = rng() % 2;
    for (std::size_t i = 0; i < missing; ++i) gold.insert("X" + std::to_string(i));
    if (gold.empty()) continue;
    const double ap = AveragePrecision(list, gold);
    check.Expect(ap == ReferenceAveragePrecision(relevant, gold.size()),
                 "AP mismatch on trial " + std::to_string(trial));
    aps.push_back(ap);
    for (const auto& g : gold) answers.insert({owner, g});
    lists.emplace(owner, std::move(list));
  }
  double sum = 0.0;
  for (double ap : aps) sum += ap;  // Owners were created in canonical order.
  const double map = MeanAveragePrecision(lists, answers);
  check.Expect(map == sum / static_cast<double>(aps.size()),
               "MAP differs from the mean of APs");
  return check.Finish(std::to_string(aps.size()) +
                      " rankings exact, MAP = mean of APs");
}

Outcome FScores() {
  Checker check;
  const double modis_f1 = FBeta(0.24, 0.68, 1.0);
  const double modis_f2 = FBeta(0.24, 0.68, 2.0);
  const double ec_f1 = FBeta(0.76, 0.60, 1.0);
  check.Expect(std::abs(modis_f1 - 0.35) <= 0.005, "MODIS F1");
  check.Expect(std::abs(modis_f2 - 0.50) <= 0.005, "MODIS F2");
  check.Expect(std::abs(ec_f1 - 0.67) <= 0.005, "EasyClinic F1");
  return check.Finish("MODIS F1 " + Fixed(modis_f1, 4) + ", F2 " +
                      Fixed(modis_f2, 4) + "; EasyClinic F1 " +
                      Fixed(ec_f1, 4));
}

Outcome StatisticsOracles() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> value(-8, 8);
  Checker check;
  std::size_t tested = 0;
  while (tested < 500) {
    const std::size_t n = 5 + tested % 6;
    std::vector<double> x(n), y(n), d;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = value(rng) / 4.0;
      y[i] = value(rng) / 4.0;
      if (x[i] != y[i]) d.push_back(x[i] - y[i]);
    }
    if (d.size() < 5) continue;
    ++tested;
    const auto result = WilcoxonSignedRank(x, y);
    check.Expect(result.exact && result.p_value == BruteForceWilcoxonP(d),
                 "Wilcoxon exact p differs from enumeration");
    const double delta = ComputeCliffsDelta(x, y).delta;
    check.Expect(delta == BruteForceCliffs(x, y), "Cliff's delta mismatch");
    check.Expect(ComputeCliffsDelta(y, x).delta == -delta,
                 "Cliff's delta not antisymmetric");
    check.Expect(ComputeCliffsDelta(x, x).delta == 0.0, "delta(x, x) != 0");
  }
  return check.Finish("500 samples with n in [5, 10]: exact p, delta, "
                      "antisymmetry, delta(x,x)=0");
}

Outcome LsiConsistency() {
  static const std::vector<std::string> words = {
      "patient", "record", "update", "login", "password", "report",
      "invoice", "print",  "session", "audit", "export",  "archive",
      "doctor",  "visit",  "schedule", "bill"};
  std::mt19937_64 rng(99);
  Checker check;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 2 + trial % 19;
    std::vector<Artifact> docs;
    for (std::size_t i = 0; i < count; ++i) {
      std::string text = "the";
      const std::size_t length = rng() % 12;
      for (std::size_t k = 0; k < length; ++k) {
        text += " " + words[rng() % words.size()];
      }
      docs.push_back({"D" + std::to_string(100 + i), Role::kTarget, text});
    }
    const auto tfidf = EmbedTfidf(docs).first;
    const auto lsi = EmbedLsi(docs, count);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        const double diff = std::abs(Cosine(lsi.matrix.row(i), lsi.matrix.row(j)) -
                                     Cosine(tfidf.row(i), tfidf.row(j)));
        worst = std::max(worst, diff);
        check.Expect(diff <= 1e-9, "LSI cosine off by more than 1e-9");
      }
    }
  }
  std::ostringstream detail;
  detail << "100 corpora of 2..20 docs, max deviation " << worst;
  return check.Finish(detail.str());
}

// A stand-in with EasyClinic's shape: 30 sources, 63 targets, 251 links.
// Each source owns a few characteristic words; its gold targets mention
// some of them among generic filler.
std::string Numbered(const char* prefix, int n) {
  return prefix + std::string(n < 10 ? "0" : "") + std::to_string(n);
}

void WriteProxyCorpus(const std::filesystem::path& root) {
  std::mt19937_64 rng(63251);
  const std::vector<std::string> syllables = {"ka", "lo", "mi", "ne", "ru",
                                              "ta", "vo", "si", "de", "pa"};
  auto word = [&] {
    std::string w;
    for (int i = 0; i < 3; ++i) w += syllables[rng() % syllables.size()];
    return w;
  };
  std::vector<std::string> filler;
  for (int i = 0; i < 40; ++i) filler.push_back(word());

  std::map<std::string, std::string> sources;
  std::map<std::string, std::string> targets;
  std::vector<std::vector<std::string>> topic(30);
  std::vector<Link> links;
  std::vector<std::string> target_text(63);
  for (int s = 0; s < 30; ++s) {
    for (int k = 0; k < 6; ++k) topic[s].push_back(word());
    std::string text;
    for (const auto& w : topic[s]) text += w + " ";
    for (int k = 0; k < 4; ++k) text += filler[rng() % filler.size()] + " ";
    const std::string id = Numbered("UC", s + 1);
    sources[id] = text;
    const int gold = s < 19 ? 8 : 9;
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < gold) {
      const int t = static_cast<int>(rng() % 63);
      if (std::find(picked.begin(), picked.end(), t) != picked.end()) continue;
      picked.push_back(t);
      links.push_back({id, Numbered("TC", t + 1)});
      for (int k = 0; k < 2; ++k) {
        target_text[t] += topic[s][rng() % topic[s].size()] + " ";
      }
    }
  }
  for (int t = 0; t < 63; ++t) {
    for (int k = 0; k < 6; ++k) {
      target_text[t] += filler[rng() % filler.size()] + " ";
    }
    targets[Numbered("TC", t + 1)] = target_text[t];
  }
  testing::WriteCorpusTree(root, sources, targets, links);
  testing::WriteText(root / "dataset.txt",
                     "sources=sources\ntargets=targets\nanswers=answers.tsv\n");
}

RunSpec SpecFromManifest(const std::filesystem::path& manifest_file) {
  const auto manifest = LoadDatasetManifest(manifest_file);
  RunSpec spec;
  spec.sources = manifest.sources;
  spec.targets = manifest.targets;
  spec.answers = manifest.answers;
  return spec;
}

Outcome EndToEnd(const std::filesystem::path& manifest_file,
                 const std::string& label) {
  Checker check;
  RunSpec spec = SpecFromManifest(manifest_file);
  spec.dataset = label;

  const auto start = std::chrono::steady_clock::now();
  const auto on = RunPipeline(spec);
  const double elapsed = Seconds(start);
  RunSpec off_spec = spec;
  off_spec.reward.rewarding_enabled = false;
  const auto off = RunPipeline(off_spec);

  const auto& corpus_check = PrepareRun(spec).corpus;
  const std::string shape = std::to_string(corpus_check.sources().size()) + "x" +
                            std::to_string(corpus_check.targets().size()) +
                            ", " +
                            std::to_string(corpus_check.answers().size()) +
                            " links";
  check.Expect(elapsed < 10.0, "pipeline took " + Fixed(elapsed) + " s");
  check.Expect(on.report.map >= off.report.map - 0.02,
               "MAP on " + Fixed(on.report.map, 4) + " < MAP off " +
                   Fixed(off.report.map, 4) + " - 0.02");

  const auto grid = GridSearch(spec, 0.25);
  check.Expect(grid.cells.size() == 16, "grid does not have 16 cells");
  const GridCell* best = nullptr;
  for (const auto& cell : grid.cells) {
    RunSpec single = spec;
    single.reward.k1 = cell.k1;
    single.reward.k2 = cell.k2;
    const double map = RunPipeline(single).report.map;
    check.Expect(map == cell.map, "grid cell MAP differs from a direct run");
    if (best == nullptr || map > best->map) best = &cell;
  }
  check.Expect(best != nullptr && best->k1 == grid.best.k1 &&
                   best->k2 == grid.best.k2 && best->map == grid.best.map,
               "best cell disagrees with recomputation");

  return check.Finish(label + " (" + shape + "): " + Fixed(elapsed) +
                      " s, MAP on " + Fixed(on.report.map, 4) + " vs off " +
                      Fixed(off.report.map, 4) + ", grid best (" +
                      FormatShortest(grid.best.k1) + ", " +
                      FormatShortest(grid.best.k2) + ")");
}

int RunCommand(std::vector<std::string> args) {
  args.insert(args.begin(), "tracerank");
  std::vector<const char*> argv;
  for (const auto& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out, err;
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome Determinism(const std::filesystem::path& proxy_manifest) {
  Checker check;
  const std::vector<std::string> tiny = {
      "--manifest", (DataDir() / "tiny" / "dataset.txt").string()};
  const auto promote = DataDir() / "promote";
  const std::vector<std::string> vectors = {
      "--manifest", (promote / "dataset.txt").string(), "--backend", "vectors",
      "--vectors-sa", (promote / "sa.vec").string(), "--vectors-ta",
      (promote / "ta.vec").string()};
  const std::vector<std::string> proxy = {"--manifest", proxy_manifest.string()};
  auto with = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const std::vector<std::vector<std::string>> commands = {
      with({"trace", "--dump"}, tiny),
      with({"trace", "--dump", "--backend", "lsi"}, proxy),
      with({"trace"}, vectors),
      with({"grid", "--step", "0.25"}, proxy),
      with({"grid", "--step", "0.5"}, vectors),
      with({"ablate"}, proxy),
      with({"ablate", "--k1", "0.25", "--k2", "0.25"}, vectors),
  };
  std::size_t files = 0;
  for (const auto& command : commands) {
    TempDir a, b;
    for (const TempDir* dir : {&a, &b}) {
      auto args = command;
      args.insert(args.begin() + 1, {"--out", dir->path().string()});
      check.Expect(RunCommand(args) == kExitOk, "command failed: " + command[0]);
    }
    for (const auto& entry : std::filesystem::directory_iterator(a.path())) {
      ++files;
      check.Expect(FilesIdentical(entry.path(),
                                  b.path() / entry.path().filename()),
                   command[0] + " output differs: " +
                       entry.path().filename().string());
    }
  }
  TempDir a, b;
  for (const TempDir* dir : {&a, &b}) {
    const auto args = with({"embed", "--backend", "lsi", "--out-sa",
                            (dir->path() / "sa.vec").string(), "--out-ta",
                            (dir->path() / "ta.vec").string()},
                           proxy);
    check.Expect(RunCommand(args) == kExitOk, "embed failed");
  }
  for (const char* name : {"sa.vec", "ta.vec"}) {
    ++files;
    check.Expect(FilesIdentical(a.path() / name, b.path() / name),
                 std::string("embed output differs: ") + name);
  }
  return check.Finish(std::to_string(files) +
                      " files byte-identical across repeated trace, grid, "
                      "ablate and embed runs");
}

int Report(const std::string& name, const std::function<Outcome()>& check,
           int& failures) {
  Outcome outcome;
  try {
    outcome = check();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": "
            << outcome.detail << std::endl;
  if (!outcome.pass) ++failures;
  return outcome.pass ? 0 : 1;
}

int RunEasyClinic() {
  const char* dir = std::getenv("TRACERANK_EASYCLINIC_DIR");
  if (dir == nullptr || *dir == '\0') {
    std::cout << "SKIP end_to_end_easyclinic: TRACERANK_EASYCLINIC_DIR is not "
                 "set"
              << std::endl;
    return kExitSkip;
  }
  int failures = 0;
  Report("end_to_end_easyclinic",
         [&] {
           return EndToEnd(std::filesystem::path(dir) / "dataset.txt",
                           "easyclinic");
         },
         failures);
  return failures == 0 ? 0 : 1;
}

int RunAll() {
  TempDir proxy;
  WriteProxyCorpus(proxy.path());
  const auto proxy_manifest = proxy.path() / "dataset.txt";

  int failures = 0;
  Report("reward_arithmetic_oracle", RewardOracle, failures);
  Report("bounding_and_top1_invariants", BoundingAndTopOne, failures);
  Report("log_base_invariance", LogBaseInvariance, failures);
  Report("ablation_degeneracy", AblationDegeneracy, failures);
  Report("ap_map_oracle", ApMapOracle, failures);
  Report("f_score_identities", FScores, failures);
  Report("statistics_oracles", StatisticsOracles, failures);
  Report("lsi_consistency", LsiConsistency, failures);
  Report("end_to_end_public_dataset_proxy",
         [&] { return EndToEnd(proxy_manifest, "easyclinic-shaped proxy"); },
         failures);
  Report("determinism", [&] { return Determinism(proxy_manifest); }, failures);
  std::cout << (failures == 0 ? "all acceptance checks passed"
                              : std::to_string(failures) + " check(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace tracerank

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--easyclinic") {
    return tracerank::RunEasyClinic();
  }
  return tracerank::RunAll();
}
