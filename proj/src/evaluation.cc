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

#include "tracerank/evaluation.h"

#include <algorithm>
#include <memory>
#include <tuple>

#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

std::map<std::string, std::set<std::string>> GoldBySource(
    const AnswerSet& answers) {
  std::map<std::string, std::set<std::string>> gold;
  for (const Link& link : answers) gold[link.source_id].insert(link.target_id);
  return gold;
}

}  // namespace

PrecisionRecall ComputePrecisionRecall(const std::set<Link>& retrieved,
                                       const AnswerSet& gold) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyGoldSet, "recall needs at least one gold link");
  }
  std::size_t correct = 0;
  for (const Link& link : retrieved) correct += gold.contains(link) ? 1 : 0;
  PrecisionRecall result;
  result.precision = retrieved.empty() ? 0.0
                                       : static_cast<double>(correct) /
                                             static_cast<double>(retrieved.size());
  result.recall =
      static_cast<double>(correct) / static_cast<double>(gold.size());
  return result;
}

double AveragePrecision(const RankedList& ranked,
                        const std::set<std::string>& gold) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyGoldSet,
                "AP of '" + ranked.owner_id + "' needs at least one gold link",
                ranked.owner_id);
  }
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < ranked.entries.size(); ++r) {
    if (!gold.contains(ranked.entries[r].id)) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(r + 1);
  }
  return sum / static_cast<double>(gold.size());
}

double MeanAveragePrecision(const RankedLists& lists,
                            const AnswerSet& answers) {
  double sum = 0.0;
  std::size_t evaluated = 0;
  for (const auto& [source, gold] : GoldBySource(answers)) {
    auto it = lists.find(source);
    if (it == lists.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no ranked list for source '" + source + "'", source);
    }
    sum += AveragePrecision(it->second, gold);
    ++evaluated;
  }
  if (evaluated == 0) {
    throw Error(ErrorCode::kNoEvaluableSources,
                "no source artifact has a gold link");
  }
  return sum / static_cast<double>(evaluated);
}

double FBeta(double precision, double recall, double beta) {
  const double b2 = beta * beta;
  const double denominator = b2 * precision + recall;
  if (denominator == 0.0) return 0.0;
  return (1.0 + b2) * precision * recall / denominator;
}

PrCurve InterpolatedPrecision(std::span<const bool> relevant,
                              std::size_t total_relevant) {
  PrCurve curve{};
  if (total_relevant == 0) return curve;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < relevant.size(); ++k) {
    if (relevant[k]) ++hits;
    const double precision =
        static_cast<double>(hits) / static_cast<double>(k + 1);
    // recall(K) >= level/10 compared in integers.
    for (std::size_t level = 1; level <= kRecallLevels; ++level) {
      if (hits * kRecallLevels >= level * total_relevant) {
        curve[level - 1] = std::max(curve[level - 1], precision);
      }
    }
  }
  return curve;
}

PrCurve PrecisionAtRecallLevels(const RankedList& ranked,
                                const std::set<std::string>& gold) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyGoldSet,
                "P-R curve of '" + ranked.owner_id + "' needs a gold link",
                ranked.owner_id);
  }
  const std::size_t n = ranked.entries.size();
  auto relevant = std::make_unique<bool[]>(n);
  for (std::size_t i = 0; i < n; ++i) {
    relevant[i] = gold.contains(ranked.entries[i].id);
  }
  return InterpolatedPrecision({relevant.get(), n}, gold.size());
}

PrCurve PooledPrecisionAtRecallLevels(const RankedLists& lists,
                                      const AnswerSet& answers) {
  if (answers.empty()) {
    throw Error(ErrorCode::kEmptyGoldSet, "pooled P-R curve needs gold links");
  }
  struct Pair {
    double score;
    const std::string* source;
    const std::string* target;
  };
  std::vector<Pair> pooled;
  for (const auto& [source, list] : lists) {
    for (const auto& entry : list.entries) {
      pooled.push_back({entry.score, &source, &entry.id});
    }
  }
  std::sort(pooled.begin(), pooled.end(), [](const Pair& a, const Pair& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(*a.source, *a.target) < std::tie(*b.source, *b.target);
  });
  auto relevant = std::make_unique<bool[]>(pooled.size());
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    relevant[i] = answers.contains(Link{*pooled[i].source, *pooled[i].target});
  }
  return InterpolatedPrecision({relevant.get(), pooled.size()}, answers.size());
}

EvalReport Evaluate(const RankedLists& reordered, const AnswerSet& answers,
                    const RewardConfig& config) {
  const auto gold = GoldBySource(answers);
  EvalReport report;
  report.k1 = config.k1;
  report.k2 = config.k2;
  report.rewarding = config.rewarding_enabled;

  std::set<Link> retrieved;
  for (const auto& [source, list] : reordered) {
    SourceMetrics metrics;
    const auto links = FinalLinks(list, config);
    std::size_t hits = 0;
    auto gold_it = gold.find(source);
    for (const auto& link : links) {
      retrieved.insert(Link{source, link.id});
      if (gold_it != gold.end() && gold_it->second.contains(link.id)) ++hits;
    }
    metrics.precision_at_k =
        links.empty() ? 0.0
                      : static_cast<double>(hits) /
                            static_cast<double>(links.size());
    if (gold_it != gold.end()) {
      metrics.ap = AveragePrecision(list, gold_it->second);
      metrics.recall_at_k = static_cast<double>(hits) /
                            static_cast<double>(gold_it->second.size());
    }
    report.per_sa.emplace(source, metrics);
  }

  report.map = MeanAveragePrecision(reordered, answers);
  const PrecisionRecall pr = ComputePrecisionRecall(retrieved, answers);
  report.precision = pr.precision;
  report.recall = pr.recall;
  report.f1 = FBeta(pr.precision, pr.recall, 1.0);
  report.f2 = FBeta(pr.precision, pr.recall, 2.0);
  report.pr_curve = PooledPrecisionAtRecallLevels(reordered, answers);
  return report;
}

std::string FormatEvalReportJson(const EvalReport& report) {
  JsonWriter json;
  json.BeginObject();
  json.Key("dataset").String(report.dataset);
  json.Key("backend").String(report.backend);
  json.Key("k1").Number(report.k1);
  json.Key("k2").Number(report.k2);
  json.Key("rewarding").Bool(report.rewarding);
  json.Key("map").Number(report.map);
  json.Key("precision").Number(report.precision);
  json.Key("recall").Number(report.recall);
  json.Key("f1").Number(report.f1);
  json.Key("f2").Number(report.f2);
  json.Key("pr_curve").BeginArray();
  for (const double value : report.pr_curve) json.Number(value);
  json.EndArray();
  json.Key("per_sa").BeginObject();
  for (const auto& [source, metrics] : report.per_sa) {
    json.Key(source).BeginObject();
    json.Key("ap");
    metrics.ap ? json.Number(*metrics.ap) : json.Null();
    json.Key("precision_at_k").Number(metrics.precision_at_k);
    json.Key("recall_at_k");
    metrics.recall_at_k ? json.Number(*metrics.recall_at_k) : json.Null();
    json.EndObject();
  }
  json.EndObject();
  json.EndObject();
  return json.Finish();
}

}  // namespace tracerank
