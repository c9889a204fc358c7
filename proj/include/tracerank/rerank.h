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

#ifndef TRACERANK_RERANK_H_
#define TRACERANK_RERANK_H_

// Specificity-weighted rewarding of ranked target artifacts.
//
// For one source artifact (SA) the candidate target artifacts (TAs) arrive as
// a list sorted by similarity. Rewarding runs in three steps:
//
//   1. The top Cutoff(k1, m) entries of that list are the high-probability
//      targets (HPTAs).
//   2. For each HPTA, the top Cutoff(k2, m - 1) entries of its own TA-TA list
//      are its to-be-rewarded targets (TRTAs).
//   3. Each TRTA i of an HPTA moves toward the list's top score:
//
//        spec_i   = log((m - 1) / count_i)
//        reward_i = (sim_first - sim_origin_i) * spec_i / sum_j spec_j
//        sim_new  = sim_origin_i + reward_i
//
//      where count_i is the number of TA-TA lists (over all m targets) whose
//      top-k2 cut contains i, and the sum runs over that HPTA's TRTAs.
//
// sim_first and sim_origin always come from the list before any reward. A TA
// reached through several HPTAs keeps the largest sim_new.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracerank/similarity.h"

namespace tracerank {

// The base cancels out of spec_i / sum_j spec_j; it only shows in traces.
enum class SpecificityLog { kNatural, kBase10 };

struct RewardConfig {
  double k1 = 0.03;  // Fraction of the SA-TA list taken as HPTAs.
  double k2 = 0.08;  // Fraction of each TA-TA list taken as TRTAs.
  bool rewarding_enabled = true;
  std::optional<std::size_t> top_k_links;  // nullopt keeps the full list.
  SpecificityLog log_base = SpecificityLog::kNatural;

  // Throws kInvalidArgument unless 0 < k1, k2 <= 1 and top_k_links >= 1.
  void Validate() const;
};

// max(1, floor(k * list_len + 1e-9)), at most list_len.
std::size_t Cutoff(double k, std::size_t list_len);

// Ids of the first Cutoff(k1, len) entries.
std::vector<std::string> SelectHptas(const RankedList& sa_list,
                                     const RewardConfig& config);

struct CountTable {
  std::map<std::string, std::size_t> count;  // Every target, zero included.
  std::size_t m = 0;
};

CountTable BuildCountTable(const RankedLists& ta_lists,
                           const RewardConfig& config);

// log((m - 1) / count). Throws kDomainError unless 1 <= count <= m - 1.
double Specificity(std::size_t count, std::size_t m,
                   SpecificityLog log_base = SpecificityLog::kNatural);

struct RewardRecord {
  std::string sa_id;
  std::string hpta_id;
  std::string trta_id;
  std::size_t count = 0;
  double spec = 0.0;
  double weight = 0.0;  // spec / sum of spec over the HPTA's TRTAs.
  double sim_first = 0.0;
  double sim_origin = 0.0;
  double reward = 0.0;
  double sim_new = 0.0;  // Candidate from this HPTA alone.

  bool operator==(const RewardRecord&) const = default;
};

// One record per (HPTA, TRTA) pair, HPTAs in rank order.
using RewardTrace = std::vector<RewardRecord>;

struct RerankResult {
  RankedList list;
  RewardTrace trace;
};

// With rewarding disabled the input list comes back unchanged and the trace
// is empty.
RerankResult ApplyRewards(const RankedList& sa_list,
                          const RankedLists& ta_lists,
                          const CountTable& counts,
                          const RewardConfig& config);

// The first top_k_links entries, or all of them.
std::vector<ScoredId> FinalLinks(const RankedList& reordered,
                                 const RewardConfig& config);

// `sa_id,hpta_id,trta_id,count,spec,sim_origin,reward,sim_new` with a header.
std::string FormatRewardTraceCsv(const RewardTrace& trace);

}  // namespace tracerank

#endif  // TRACERANK_RERANK_H_
