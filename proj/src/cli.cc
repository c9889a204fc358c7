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

#include "tracerank/cli.h"

#include <charconv>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tracerank/error.h"
#include "tracerank/experiment.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

// Raised for flag combinations that CLI11 cannot express.
struct UsageError {
  std::string message;
};

struct CommonFlags {
  std::string manifest;
  std::string dataset;
  std::string sources;
  std::string targets;
  std::string answers;
  std::string backend = "tfidf";
  std::string vectors_sa;
  std::string vectors_ta;
  std::string wordvec;
  std::optional<std::size_t> rank;
  bool stem = false;
  bool verbose = false;
};

struct RewardFlags {
  double k1 = 0.03;
  double k2 = 0.08;
  bool no_reward = false;
  std::string top_k = "all";
};

void AddCommonFlags(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--manifest", flags.manifest,
                 "Dataset manifest with sources=, targets=, answers= lines");
  cmd.add_option("--dataset", flags.dataset,
                 "Dataset label for reports (default: dataset directory name)");
  cmd.add_option("--sources", flags.sources,
                 "Directory of source artifacts, one <id>.txt per artifact");
  cmd.add_option("--targets", flags.targets,
                 "Directory of target artifacts, one <id>.txt per artifact");
  cmd.add_option("--answers", flags.answers,
                 "Gold links, one source_id<TAB>target_id per line");
  cmd.add_option("--backend", flags.backend, "Embedding backend")
      ->check(CLI::IsMember({"tfidf", "lsi", "wordvec", "vectors"}));
  cmd.add_option("--vectors-sa", flags.vectors_sa,
                 "Vector file for source artifacts (backend vectors)");
  cmd.add_option("--vectors-ta", flags.vectors_ta,
                 "Vector file for target artifacts (backend vectors)");
  cmd.add_option("--wordvec", flags.wordvec,
                 "Word-vector table in text format (backend wordvec)");
  cmd.add_option("--rank", flags.rank, "LSI rank (backend lsi)")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--stem", flags.stem, "Apply Porter stemming to tokens");
  cmd.add_flag("-v,--verbose", flags.verbose, "Progress messages on stderr");
}

void AddRewardFlags(CLI::App& cmd, RewardFlags& flags, bool with_top_k) {
  cmd.add_option("--k1", flags.k1, "HPTA fraction of the SA-TA list, in (0,1]")
      ->capture_default_str();
  cmd.add_option("--k2", flags.k2, "TRTA fraction of each TA-TA list, in (0,1]")
      ->capture_default_str();
  if (with_top_k) {
    cmd.add_flag("--no-reward", flags.no_reward,
                 "Skip rewarding; rank by similarity only");
    cmd.add_option("--top-k", flags.top_k,
                   "Links kept per source: a positive integer or 'all'")
        ->capture_default_str();
  }
}

std::optional<std::size_t> ParseTopK(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::size_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size() ||
      value == 0) {
    throw UsageError{"--top-k must be a positive integer or 'all', got '" +
                     text + "'"};
  }
  return value;
}

RunSpec BuildRunSpec(const CommonFlags& flags) {
  RunSpec spec;
  if (!flags.manifest.empty()) {
    const DatasetManifest manifest = LoadDatasetManifest(flags.manifest);
    spec.sources = manifest.sources;
    spec.targets = manifest.targets;
    spec.answers = manifest.answers;
  }
  if (!flags.sources.empty()) spec.sources = flags.sources;
  if (!flags.targets.empty()) spec.targets = flags.targets;
  if (!flags.answers.empty()) spec.answers = flags.answers;
  if (spec.sources.empty()) throw UsageError{"--sources is required"};
  if (spec.targets.empty()) throw UsageError{"--targets is required"};
  if (spec.answers.empty()) throw UsageError{"--answers is required"};
  spec.dataset = flags.dataset;

  spec.backend = *ParseBackend(flags.backend);
  const bool vectors = spec.backend == Backend::kVectors;
  if (vectors) {
    if (flags.vectors_sa.empty()) {
      throw UsageError{"--backend vectors requires --vectors-sa"};
    }
    if (flags.vectors_ta.empty()) {
      throw UsageError{"--backend vectors requires --vectors-ta"};
    }
  } else if (!flags.vectors_sa.empty() || !flags.vectors_ta.empty()) {
    throw UsageError{"--vectors-sa/--vectors-ta only apply to --backend vectors"};
  }
  if (spec.backend == Backend::kWordVec) {
    if (flags.wordvec.empty()) {
      throw UsageError{"--backend wordvec requires --wordvec"};
    }
  } else if (!flags.wordvec.empty()) {
    throw UsageError{"--wordvec only applies to --backend wordvec"};
  }
  if (flags.rank && spec.backend != Backend::kLsi) {
    throw UsageError{"--rank only applies to --backend lsi"};
  }
  if (flags.stem && vectors) {
    throw UsageError{"--stem has no effect with --backend vectors"};
  }
  spec.vectors_sa = flags.vectors_sa;
  spec.vectors_ta = flags.vectors_ta;
  spec.wordvec_table = flags.wordvec;
  spec.lsi_rank = flags.rank;
  spec.stem = flags.stem;
  return spec;
}

RewardConfig BuildRewardConfig(const RewardFlags& flags) {
  RewardConfig config;
  config.k1 = flags.k1;
  config.k2 = flags.k2;
  config.rewarding_enabled = !flags.no_reward;
  config.top_k_links = ParseTopK(flags.top_k);
  try {
    config.Validate();
  } catch (const Error& e) {
    throw UsageError{"--" + e.subject() + ": " + e.detail()};
  }
  return config;
}

void PrintWarnings(const std::vector<std::string>& warnings,
                   std::ostream& err) {
  for (const auto& warning : warnings) err << "warning: " << warning << "\n";
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Traceability link recovery with specificity-based reranking",
               "tracerank"};
  app.require_subcommand(1);

  CommonFlags trace_common;
  RewardFlags trace_reward;
  std::string trace_out;
  bool trace_dump = false;
  CLI::App* trace = app.add_subcommand(
      "trace", "Rank, rerank and evaluate; writes links.tsv, report.json, rewards.csv");
  AddCommonFlags(*trace, trace_common);
  AddRewardFlags(*trace, trace_reward, /*with_top_k=*/true);
  trace->add_option("--out", trace_out, "Output directory")->required();
  trace->add_flag("--dump", trace_dump,
                  "Also write similarity.csv, sa.vec and ta.vec");

  CommonFlags grid_common;
  double grid_step = 0.01;
  std::string grid_out;
  CLI::App* grid = app.add_subcommand(
      "grid", "MAP over the (k1, k2) grid; writes grid.csv and best.json");
  AddCommonFlags(*grid, grid_common);
  grid->add_option("--step", grid_step, "Grid spacing; must divide 1")
      ->capture_default_str();
  grid->add_option("--out", grid_out, "Output directory")->required();

  CommonFlags ablate_common;
  RewardFlags ablate_reward;
  std::string ablate_out;
  CLI::App* ablate = app.add_subcommand(
      "ablate",
      "Compare rewarding on and off; writes with.json, without.json, stats.json");
  AddCommonFlags(*ablate, ablate_common);
  AddRewardFlags(*ablate, ablate_reward, /*with_top_k=*/false);
  ablate->add_option("--out", ablate_out, "Output directory")->required();

  CommonFlags embed_common;
  std::string embed_out_sa;
  std::string embed_out_ta;
  CLI::App* embed = app.add_subcommand(
      "embed", "Write the chosen backend's embeddings as vector files");
  AddCommonFlags(*embed, embed_common);
  embed->add_option("--out-sa", embed_out_sa, "Vector file for sources")
      ->required();
  embed->add_option("--out-ta", embed_out_ta, "Vector file for targets")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (trace->parsed()) {
      RunSpec spec = BuildRunSpec(trace_common);
      spec.reward = BuildRewardConfig(trace_reward);
      spec.output_dir = trace_out;
      spec.dump_intermediates = trace_dump;
      const PreparedRun prepared = PrepareRun(spec);
      const PipelineOutput output =
          RerankAndEvaluate(prepared, spec.reward, spec);
      PrintWarnings(output.warnings, err);
      WriteTraceOutputs(spec.output_dir, spec, prepared, output);
      out << "trace " << output.report.dataset
          << ": map=" << FormatShortest(output.report.map)
          << " precision=" << FormatShortest(output.report.precision)
          << " recall=" << FormatShortest(output.report.recall)
          << " f1=" << FormatShortest(output.report.f1) << "\n";
    } else if (grid->parsed()) {
      RunSpec spec = BuildRunSpec(grid_common);
      try {
        GridPointsPerAxis(grid_step);
      } catch (const Error& e) {
        throw UsageError{"--step: " + e.detail()};
      }
      spec.output_dir = grid_out;
      const PreparedRun prepared = PrepareRun(spec);
      PrintWarnings(prepared.warnings, err);
      if (grid_common.verbose) err << "grid: evaluating cells\n";
      const GridResult result = GridSearch(prepared, grid_step);
      WriteGridOutputs(spec.output_dir, spec, result, grid_step);
      out << "grid " << spec.DatasetLabel() << ": " << result.cells.size()
          << " cells, best k1=" << FormatShortest(result.best.k1)
          << " k2=" << FormatShortest(result.best.k2)
          << " map=" << FormatShortest(result.best.map) << "\n";
    } else if (ablate->parsed()) {
      RunSpec spec = BuildRunSpec(ablate_common);
      spec.reward = BuildRewardConfig(ablate_reward);
      spec.output_dir = ablate_out;
      const AblationResult result = Ablation(spec);
      PrintWarnings(result.with_rewards.warnings, err);
      WriteAblationOutputs(spec.output_dir, spec, result);
      out << "ablate " << spec.DatasetLabel()
          << ": map_with=" << FormatShortest(result.with_rewards.report.map)
          << " map_without="
          << FormatShortest(result.without_rewards.report.map) << " p="
          << (result.stats.p_value ? FormatShortest(*result.stats.p_value)
                                   : std::string("n/a"))
          << " delta=" << FormatShortest(result.stats.cliffs_delta) << "\n";
    } else if (embed->parsed()) {
      RunSpec spec = BuildRunSpec(embed_common);
      if (spec.backend == Backend::kVectors) {
        throw UsageError{"embed needs a computing backend, not 'vectors'"};
      }
      const PreparedRun prepared = PrepareRun(spec);
      PrintWarnings(prepared.warnings, err);
      WriteVectors(embed_out_sa, prepared.sa);
      WriteVectors(embed_out_ta, prepared.ta);
      out << "embed " << spec.DatasetLabel() << ": " << prepared.sa.rows()
          << " + " << prepared.ta.rows() << " vectors, dim "
          << prepared.sa.dim() << "\n";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error";
    if (!e.stage().empty()) err << " in stage " << e.stage();
    err << ": " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace tracerank
