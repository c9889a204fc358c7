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

#ifndef TRACERANK_EVALUATION_H_
#define TRACERANK_EVALUATION_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracerank/corpus.h"
#include "tracerank/rerank.h"
#include "tracerank/similarity.h"

namespace tracerank {

inline constexpr std::size_t kRecallLevels = 10;
using PrCurve = std::array<double, kRecallLevels>;

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

// Precision is 0 when nothing was retrieved. Throws kEmptyGoldSet.
PrecisionRecall ComputePrecisionRecall(const std::set<Link>& retrieved,
                                       const AnswerSet& gold);

// Sum over ranks r of precision@r for relevant r, divided by |gold|.
// Throws kEmptyGoldSet.
double AveragePrecision(const RankedList& ranked,
                        const std::set<std::string>& gold);

// Mean AP over sources with at least one gold link, summed in canonical
// order. Throws kNoEvaluableSources.
double MeanAveragePrecision(const RankedLists& lists, const AnswerSet& answers);

// (1 + b^2) p r / (b^2 p + r), 0 when the denominator is 0.
double FBeta(double precision, double recall, double beta);

// Interpolated precision at recall 0.1, 0.2, ..., 1.0 over a ranking given as
// relevance flags. `total_relevant` may exceed the flags' hit count.
PrCurve InterpolatedPrecision(std::span<const bool> relevant,
                              std::size_t total_relevant);

// Throws kEmptyGoldSet.
PrCurve PrecisionAtRecallLevels(const RankedList& ranked,
                                const std::set<std::string>& gold);

// All (source, target) pairs pooled into one ranking by score, ties by source
// id then target id, scored against the whole answer set.
PrCurve PooledPrecisionAtRecallLevels(const RankedLists& lists,
                                      const AnswerSet& answers);

struct SourceMetrics {
  std::optional<double> ap;  // Absent when the source has no gold links.
  double precision_at_k = 0.0;
  std::optional<double> recall_at_k;
};

struct EvalReport {
  std::string dataset;
  std::string backend;
  double k1 = 0.0;
  double k2 = 0.0;
  bool rewarding = false;
  double map = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  PrCurve pr_curve{};
  std::map<std::string, SourceMetrics> per_sa;
};

// AP, MAP and the P-R curve use the full `reordered` lists; precision,
// recall and F scores use the top-k cut from `config`.
EvalReport Evaluate(const RankedLists& reordered, const AnswerSet& answers,
                    const RewardConfig& config);

// Fixed key order, floats with 17 significant digits.
std::string FormatEvalReportJson(const EvalReport& report);

struct WilcoxonResult {
  double p_value = 1.0;  // Two-sided.
  double w_plus = 0.0;
  double w_minus = 0.0;
  std::size_t n = 0;  // Pairs left after dropping zero differences.
  bool exact = false;
};

// Signed-rank test on paired samples. Zero differences are dropped, tied
// magnitudes get average ranks. Exact null distribution for n <= 25, normal
// approximation with continuity correction above. Throws kTooFewPairs when
// fewer than 5 non-zero differences remain, kInvalidArgument on a length
// mismatch.
WilcoxonResult WilcoxonSignedRank(std::span<const double> x,
                                  std::span<const double> y);

enum class EffectMagnitude { kNegligible, kSmall, kMedium, kLarge };

std::string_view EffectMagnitudeName(EffectMagnitude magnitude);

// |d| < 0.147 negligible, < 0.33 small, < 0.474 medium, else large.
EffectMagnitude ClassifyEffect(double delta);

struct CliffsDelta {
  double delta = 0.0;
  EffectMagnitude magnitude = EffectMagnitude::kNegligible;
};

// (#{x_i > y_j} - #{x_i < y_j}) / (|x| |y|). Throws kInvalidArgument on an
// empty sample.
CliffsDelta ComputeCliffsDelta(std::span<const double> x,
                               std::span<const double> y);

struct StatResult {
  std::optional<double> p_value;  // Absent when the test was degenerate.
  double cliffs_delta = 0.0;
  EffectMagnitude magnitude = EffectMagnitude::kNegligible;
  std::size_t n = 0;
  std::string degenerate_reason;  // Empty unless p_value is absent.
};

// Wilcoxon plus Cliff's delta; a TooFewPairs outcome is recorded, not thrown.
StatResult CompareSamples(std::span<const double> x, std::span<const double> y);

std::string FormatStatResultJson(const StatResult& stats);

}  // namespace tracerank

#endif  // TRACERANK_EVALUATION_H_
