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

#ifndef TRACERANK_EXPERIMENT_H_
#define TRACERANK_EXPERIMENT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracerank/corpus.h"
#include "tracerank/embedding.h"
#include "tracerank/evaluation.h"
#include "tracerank/rerank.h"
#include "tracerank/similarity.h"

namespace tracerank {

inline constexpr std::string_view kEngineVersion = "tracerank 1.0.0";

enum class Backend { kTfidf, kLsi, kWordVec, kVectors };

std::string_view BackendName(Backend backend);
std::optional<Backend> ParseBackend(std::string_view name);

struct RunSpec {
  std::string dataset;  // Report label; defaults to the dataset directory.
  std::filesystem::path sources;
  std::filesystem::path targets;
  std::filesystem::path answers;
  Backend backend = Backend::kTfidf;
  std::optional<std::size_t> lsi_rank;  // Default: DefaultLsiRank(n_docs).
  std::filesystem::path wordvec_table;
  std::filesystem::path vectors_sa;
  std::filesystem::path vectors_ta;
  bool stem = false;
  RewardConfig reward;
  std::filesystem::path output_dir;
  bool dump_intermediates = false;

  std::string DatasetLabel() const;
};

// Corpus, embeddings and similarity lists: everything that does not depend
// on k1, k2 or the rewarding switch.
struct PreparedRun {
  Corpus corpus;
  EmbeddingMatrix sa;
  EmbeddingMatrix ta;
  SimilarityMatrix sa_ta;
  RankedLists sa_lists;
  RankedLists ta_lists;
  std::vector<std::string> warnings;
};

// Errors come back tagged with the failing stage.
PreparedRun PrepareRun(const RunSpec& spec);

struct PipelineOutput {
  EvalReport report;
  RankedLists reordered;
  RewardTrace trace;  // Canonical source order.
  std::vector<std::string> warnings;
};

PipelineOutput RerankAndEvaluate(const PreparedRun& prepared,
                                 const RewardConfig& config,
                                 const RunSpec& spec);

// Only MAP over full lists, for grid cells.
double RerankedMap(const PreparedRun& prepared, const RewardConfig& config);

PipelineOutput RunPipeline(const RunSpec& spec);

struct GridCell {
  double k1 = 0.0;
  double k2 = 0.0;
  double map = 0.0;
};

struct GridResult {
  std::vector<GridCell> cells;  // k1-major, both ascending.
  GridCell best;                // Highest MAP; ties to smallest k1, then k2.
};

// Number of grid points per axis when `step` divides 1 within 1e-9; throws
// kInvalidArgument otherwise.
std::size_t GridPointsPerAxis(double step);

// MAP for every (k1, k2) in {step, 2 step, ..., 1}^2 on full lists, with
// rewarding forced on. Embeddings are computed once.
GridResult GridSearch(const RunSpec& spec, double step = 0.01);
GridResult GridSearch(const PreparedRun& prepared, double step);

struct AblationResult {
  PipelineOutput with_rewards;
  PipelineOutput without_rewards;
  StatResult stats;  // On the two pooled 10-point P-R curves.
};

AblationResult Ablation(const RunSpec& spec);

// Output files. Every writer creates `dir` when missing.
std::string FormatLinksTsv(const RankedLists& reordered,
                           const RewardConfig& config);
std::string FormatGridCsv(const GridResult& grid);
std::string FormatBestJson(const GridResult& grid, double step);
std::string FormatRunManifestJson(const RunSpec& spec, std::string_view command);

// links.tsv, report.json, rewards.csv, manifest.json (plus similarity and
// vector dumps when requested).
void WriteTraceOutputs(const std::filesystem::path& dir, const RunSpec& spec,
                       const PreparedRun& prepared,
                       const PipelineOutput& output);
void WriteGridOutputs(const std::filesystem::path& dir, const RunSpec& spec,
                      const GridResult& grid, double step);
void WriteAblationOutputs(const std::filesystem::path& dir,
                          const RunSpec& spec, const AblationResult& result);

}  // namespace tracerank

#endif  // TRACERANK_EXPERIMENT_H_
