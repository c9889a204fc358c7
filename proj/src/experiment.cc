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

#include "tracerank/experiment.h"

#include <cmath>
#include <map>
#include <utility>

#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

template <typename Fn>
auto RunStage(std::string_view stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.WithStage(std::string(stage));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kIoError, e.what()).WithStage(std::string(stage));
  }
}

std::vector<Artifact> AllArtifacts(const Corpus& corpus) {
  std::vector<Artifact> all = corpus.sources();
  all.insert(all.end(), corpus.targets().begin(), corpus.targets().end());
  return all;
}

void EnsureDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + dir.string() + ": " + ec.message(),
                dir.string());
  }
}

std::string PathString(const std::filesystem::path& path) {
  return path.generic_string();
}

}  // namespace

std::string_view BackendName(Backend backend) {
  switch (backend) {
    case Backend::kTfidf: return "tfidf";
    case Backend::kLsi: return "lsi";
    case Backend::kWordVec: return "wordvec";
    case Backend::kVectors: return "vectors";
  }
  return "unknown";
}

std::optional<Backend> ParseBackend(std::string_view name) {
  for (Backend b : {Backend::kTfidf, Backend::kLsi, Backend::kWordVec,
                    Backend::kVectors}) {
    if (BackendName(b) == name) return b;
  }
  return std::nullopt;
}

std::string RunSpec::DatasetLabel() const {
  if (!dataset.empty()) return dataset;
  std::filesystem::path dir = sources.lexically_normal();
  if (!dir.has_filename()) dir = dir.parent_path();
  const std::string parent = dir.parent_path().filename().string();
  return parent.empty() ? "dataset" : parent;
}

PreparedRun PrepareRun(const RunSpec& spec) {
  Corpus corpus = RunStage("load_corpus", [&] {
    return LoadCorpus(spec.sources, spec.targets, spec.answers);
  });
  const auto source_ids = corpus.source_ids();
  const auto target_ids = corpus.target_ids();
  std::vector<std::string> warnings;
  const TokenizerOptions tokenizer{spec.stem};

  auto [sa, ta] = RunStage("embed", [&] {
    EmbeddingMatrix all;
    switch (spec.backend) {
      case Backend::kTfidf:
        all = EmbedTfidf(AllArtifacts(corpus), tokenizer).first;
        break;
      case Backend::kLsi: {
        const auto artifacts = AllArtifacts(corpus);
        const std::size_t rank =
            spec.lsi_rank.value_or(DefaultLsiRank(artifacts.size()));
        LsiEmbedding lsi = EmbedLsi(artifacts, rank, tokenizer);
        if (lsi.rank_clamped) {
          warnings.push_back("LSI rank " + std::to_string(rank) +
                             " clamped to numerical rank " +
                             std::to_string(lsi.numerical_rank));
        }
        all = std::move(lsi.matrix);
        break;
      }
      case Backend::kWordVec:
        all = EmbedWordVectors(AllArtifacts(corpus),
                               LoadWordVectorTable(spec.wordvec_table),
                               tokenizer);
        break;
      case Backend::kVectors: {
        EmbeddingMatrix sa_vectors = LoadVectors(spec.vectors_sa, source_ids);
        EmbeddingMatrix ta_vectors = LoadVectors(spec.vectors_ta, target_ids);
        if (sa_vectors.dim() != ta_vectors.dim()) {
          throw Error(ErrorCode::kDimensionMismatch,
                      "source vectors have dim " +
                          std::to_string(sa_vectors.dim()) +
                          ", target vectors dim " +
                          std::to_string(ta_vectors.dim()));
        }
        return std::pair{std::move(sa_vectors), std::move(ta_vectors)};
      }
    }
    return std::pair{all.Select(source_ids), all.Select(target_ids)};
  });

  return RunStage("similarity", [&] {
    SimilarityMatrix sa_ta = SaTaMatrix(sa, ta);
    RankedLists sa_lists = SaTaLists(sa_ta);
    RankedLists ta_lists = TaTaLists(ta);
    return PreparedRun{std::move(corpus),   std::move(sa),
                       std::move(ta),       std::move(sa_ta),
                       std::move(sa_lists), std::move(ta_lists),
                       std::move(warnings)};
  });
}

PipelineOutput RerankAndEvaluate(const PreparedRun& prepared,
                                 const RewardConfig& config,
                                 const RunSpec& spec) {
  PipelineOutput output;
  output.warnings = prepared.warnings;
  RunStage("rerank", [&] {
    config.Validate();
    const CountTable counts = BuildCountTable(prepared.ta_lists, config);
    for (const auto& [source, list] : prepared.sa_lists) {
      RerankResult result =
          ApplyRewards(list, prepared.ta_lists, counts, config);
      output.trace.insert(output.trace.end(), result.trace.begin(),
                          result.trace.end());
      output.reordered.emplace(source, std::move(result.list));
    }
  });
  output.report = RunStage("evaluate", [&] {
    return Evaluate(output.reordered, prepared.corpus.answers(), config);
  });
  output.report.dataset = spec.DatasetLabel();
  output.report.backend = std::string(BackendName(spec.backend));
  return output;
}

double RerankedMap(const PreparedRun& prepared, const RewardConfig& config) {
  config.Validate();
  const CountTable counts = BuildCountTable(prepared.ta_lists, config);
  RankedLists reordered;
  for (const auto& [source, list] : prepared.sa_lists) {
    reordered.emplace(source,
                      ApplyRewards(list, prepared.ta_lists, counts, config).list);
  }
  return MeanAveragePrecision(reordered, prepared.corpus.answers());
}

PipelineOutput RunPipeline(const RunSpec& spec) {
  const PreparedRun prepared = PrepareRun(spec);
  return RerankAndEvaluate(prepared, spec.reward, spec);
}

std::size_t GridPointsPerAxis(double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "step must lie in (0, 1], got " + FormatShortest(step), "step");
  }
  const double points = std::round(1.0 / step);
  if (std::abs(points * step - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "step " + FormatShortest(step) + " does not divide 1", "step");
  }
  return static_cast<std::size_t>(points);
}

GridResult GridSearch(const PreparedRun& prepared, double step) {
  const std::size_t points = GridPointsPerAxis(step);
  const std::size_t m = prepared.ta_lists.size();
  RewardConfig config;
  config.rewarding_enabled = true;
  config.top_k_links.reset();

  // A cell's outcome depends only on the two integer cutoffs, so cells that
  // round to the same cutoffs share one evaluation.
  std::map<std::pair<std::size_t, std::size_t>, double> by_cutoff;
  GridResult grid;
  grid.cells.reserve(points * points);
  bool have_best = false;
  for (std::size_t i = 1; i <= points; ++i) {
    for (std::size_t j = 1; j <= points; ++j) {
      config.k1 = static_cast<double>(i) / static_cast<double>(points);
      config.k2 = static_cast<double>(j) / static_cast<double>(points);
      const auto key = std::pair{Cutoff(config.k1, m), Cutoff(config.k2, m - 1)};
      auto it = by_cutoff.find(key);
      if (it == by_cutoff.end()) {
        it = by_cutoff.emplace(key, RerankedMap(prepared, config)).first;
      }
      const GridCell cell{config.k1, config.k2, it->second};
      grid.cells.push_back(cell);
      if (!have_best || cell.map > grid.best.map) {
        grid.best = cell;
        have_best = true;
      }
    }
  }
  return grid;
}

GridResult GridSearch(const RunSpec& spec, double step) {
  GridPointsPerAxis(step);
  const PreparedRun prepared = PrepareRun(spec);
  return RunStage("grid", [&] { return GridSearch(prepared, step); });
}

AblationResult Ablation(const RunSpec& spec) {
  const PreparedRun prepared = PrepareRun(spec);
  RewardConfig with = spec.reward;
  with.rewarding_enabled = true;
  RewardConfig without = spec.reward;
  without.rewarding_enabled = false;
  AblationResult result{RerankAndEvaluate(prepared, with, spec),
                        RerankAndEvaluate(prepared, without, spec),
                        {}};
  result.stats = RunStage("statistics", [&] {
    return CompareSamples(result.with_rewards.report.pr_curve,
                          result.without_rewards.report.pr_curve);
  });
  return result;
}

std::string FormatLinksTsv(const RankedLists& reordered,
                           const RewardConfig& config) {
  std::string out;
  for (const auto& [source, list] : reordered) {
    const auto links = FinalLinks(list, config);
    for (std::size_t r = 0; r < links.size(); ++r) {
      out += source + '\t' + links[r].id + '\t' + FormatDouble(links[r].score) +
             '\t' + std::to_string(r + 1) + '\n';
    }
  }
  return out;
}

std::string FormatGridCsv(const GridResult& grid) {
  std::string out = "k1,k2,map\n";
  for (const GridCell& cell : grid.cells) {
    out += FormatShortest(cell.k1) + ',' + FormatShortest(cell.k2) + ',' +
           FormatDouble(cell.map) + '\n';
  }
  return out;
}

std::string FormatBestJson(const GridResult& grid, double step) {
  JsonWriter json;
  json.BeginObject();
  json.Key("step").Number(step);
  json.Key("cells").Integer(static_cast<long long>(grid.cells.size()));
  json.Key("k1").Number(grid.best.k1);
  json.Key("k2").Number(grid.best.k2);
  json.Key("map").Number(grid.best.map);
  json.EndObject();
  return json.Finish();
}

std::string FormatRunManifestJson(const RunSpec& spec,
                                  std::string_view command) {
  JsonWriter json;
  json.BeginObject();
  json.Key("engine").String(kEngineVersion);
  json.Key("command").String(command);
  json.Key("dataset").String(spec.DatasetLabel());
  json.Key("sources").String(PathString(spec.sources));
  json.Key("targets").String(PathString(spec.targets));
  json.Key("answers").String(PathString(spec.answers));
  json.Key("backend").String(BackendName(spec.backend));
  json.Key("lsi_rank");
  spec.lsi_rank ? json.Integer(static_cast<long long>(*spec.lsi_rank))
                : json.Null();
  json.Key("wordvec").String(PathString(spec.wordvec_table));
  json.Key("vectors_sa").String(PathString(spec.vectors_sa));
  json.Key("vectors_ta").String(PathString(spec.vectors_ta));
  json.Key("stem").Bool(spec.stem);
  json.Key("k1").Number(spec.reward.k1);
  json.Key("k2").Number(spec.reward.k2);
  json.Key("rewarding").Bool(spec.reward.rewarding_enabled);
  json.Key("top_k");
  spec.reward.top_k_links
      ? json.Integer(static_cast<long long>(*spec.reward.top_k_links))
      : json.String("all");
  json.EndObject();
  return json.Finish();
}

void WriteTraceOutputs(const std::filesystem::path& dir, const RunSpec& spec,
                       const PreparedRun& prepared,
                       const PipelineOutput& output) {
  RunStage("write", [&] {
    EnsureDirectory(dir);
    WriteFileOrThrow(dir / "links.tsv",
                     FormatLinksTsv(output.reordered, spec.reward));
    WriteFileOrThrow(dir / "report.json", FormatEvalReportJson(output.report));
    WriteFileOrThrow(dir / "rewards.csv", FormatRewardTraceCsv(output.trace));
    WriteFileOrThrow(dir / "manifest.json",
                     FormatRunManifestJson(spec, "trace"));
    if (spec.dump_intermediates) {
      WriteFileOrThrow(dir / "similarity.csv",
                       FormatSimilarityCsv(prepared.sa_ta));
      WriteVectors(dir / "sa.vec", prepared.sa);
      WriteVectors(dir / "ta.vec", prepared.ta);
    }
  });
}

void WriteGridOutputs(const std::filesystem::path& dir, const RunSpec& spec,
                      const GridResult& grid, double step) {
  RunStage("write", [&] {
    EnsureDirectory(dir);
    WriteFileOrThrow(dir / "grid.csv", FormatGridCsv(grid));
    WriteFileOrThrow(dir / "best.json", FormatBestJson(grid, step));
    WriteFileOrThrow(dir / "manifest.json",
                     FormatRunManifestJson(spec, "grid"));
  });
}

void WriteAblationOutputs(const std::filesystem::path& dir,
                          const RunSpec& spec, const AblationResult& result) {
  RunStage("write", [&] {
    EnsureDirectory(dir);
    WriteFileOrThrow(dir / "with.json",
                     FormatEvalReportJson(result.with_rewards.report));
    WriteFileOrThrow(dir / "without.json",
                     FormatEvalReportJson(result.without_rewards.report));
    WriteFileOrThrow(dir / "stats.json", FormatStatResultJson(result.stats));
    WriteFileOrThrow(dir / "manifest.json",
                     FormatRunManifestJson(spec, "ablate"));
  });
}

}  // namespace tracerank
