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

#include "tracerank/rerank.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {

void RewardConfig::Validate() const {
  auto check = [](double k, const char* name) {
    if (!(k > 0.0 && k <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " must lie in (0, 1], got " +
                      FormatShortest(k),
                  name);
    }
  };
  check(k1, "k1");
  check(k2, "k2");
  if (top_k_links && *top_k_links == 0) {
    throw Error(ErrorCode::kInvalidArgument, "top_k_links must be positive",
                "top_k_links");
  }
}

std::size_t Cutoff(double k, std::size_t list_len) {
  const double raw = std::floor(k * static_cast<double>(list_len) + 1e-9);
  const auto count = raw < 1.0 ? std::size_t{1} : static_cast<std::size_t>(raw);
  return std::min(count, list_len);
}

std::vector<std::string> SelectHptas(const RankedList& sa_list,
                                     const RewardConfig& config) {
  const std::size_t n = Cutoff(config.k1, sa_list.entries.size());
  std::vector<std::string> hptas;
  hptas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) hptas.push_back(sa_list.entries[i].id);
  return hptas;
}

CountTable BuildCountTable(const RankedLists& ta_lists,
                           const RewardConfig& config) {
  CountTable table;
  table.m = ta_lists.size();
  for (const auto& [id, list] : ta_lists) table.count.emplace(id, 0);
  for (const auto& [id, list] : ta_lists) {
    const std::size_t n = Cutoff(config.k2, list.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto it = table.count.find(list.entries[i].id);
      if (it == table.count.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "TA-TA list of '" + id + "' names unknown target '" +
                        list.entries[i].id + "'",
                    list.entries[i].id);
      }
      ++it->second;
    }
  }
  return table;
}

double Specificity(std::size_t count, std::size_t m, SpecificityLog log_base) {
  if (m < 2 || count == 0 || count > m - 1) {
    throw Error(ErrorCode::kDomainError,
                "specificity needs 1 <= count <= m - 1 (count=" +
                    std::to_string(count) + ", m=" + std::to_string(m) + ")");
  }
  const double ratio =
      static_cast<double>(m - 1) / static_cast<double>(count);
  return log_base == SpecificityLog::kNatural ? std::log(ratio)
                                              : std::log10(ratio);
}

RerankResult ApplyRewards(const RankedList& sa_list,
                          const RankedLists& ta_lists,
                          const CountTable& counts,
                          const RewardConfig& config) {
  RerankResult result{sa_list, {}};
  if (!config.rewarding_enabled || sa_list.entries.empty()) return result;
  const std::size_t m = sa_list.entries.size();
  if (counts.m != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "SA-TA list of '" + sa_list.owner_id + "' has " +
                    std::to_string(m) + " entries but the count table covers " +
                    std::to_string(counts.m) + " targets");
  }

  std::unordered_map<std::string_view, double> origin;
  for (const auto& entry : sa_list.entries) origin.emplace(entry.id, entry.score);
  const double sim_first = sa_list.entries.front().score;

  std::unordered_map<std::string, double> best;
  for (const std::string& hpta : SelectHptas(sa_list, config)) {
    auto list_it = ta_lists.find(hpta);
    if (list_it == ta_lists.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no TA-TA list for '" + hpta + "'", hpta);
    }
    const auto& neighbours = list_it->second.entries;
    const std::size_t r = Cutoff(config.k2, neighbours.size());

    std::vector<RewardRecord> records(r);
    double spec_sum = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      RewardRecord& record = records[i];
      record.sa_id = sa_list.owner_id;
      record.hpta_id = hpta;
      record.trta_id = neighbours[i].id;
      auto count_it = counts.count.find(record.trta_id);
      auto origin_it = origin.find(record.trta_id);
      if (count_it == counts.count.end() || origin_it == origin.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "TRTA '" + record.trta_id + "' is not a known target",
                    record.trta_id);
      }
      record.count = count_it->second;
      record.spec = Specificity(record.count, m, config.log_base);
      record.sim_first = sim_first;
      record.sim_origin = origin_it->second;
      spec_sum += record.spec;
    }

    for (RewardRecord& record : records) {
      record.weight = spec_sum > 0.0 ? record.spec / spec_sum : 0.0;
      record.reward = (sim_first - record.sim_origin) * record.weight;
      // Rounding may push origin + reward one ulp past sim_first.
      record.sim_new = std::min(sim_first, record.sim_origin + record.reward);
      auto [it, inserted] = best.emplace(record.trta_id, record.sim_new);
      if (!inserted) it->second = std::max(it->second, record.sim_new);
      result.trace.push_back(std::move(record));
    }
  }

  for (ScoredId& entry : result.list.entries) {
    auto it = best.find(entry.id);
    if (it != best.end()) entry.score = it->second;
  }
  SortRanked(result.list.entries);
  return result;
}

std::vector<ScoredId> FinalLinks(const RankedList& reordered,
                                 const RewardConfig& config) {
  std::size_t n = reordered.entries.size();
  if (config.top_k_links) n = std::min(n, *config.top_k_links);
  return {reordered.entries.begin(),
          reordered.entries.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::string FormatRewardTraceCsv(const RewardTrace& trace) {
  std::string out = "sa_id,hpta_id,trta_id,count,spec,sim_origin,reward,sim_new\n";
  for (const RewardRecord& record : trace) {
    out += record.sa_id + ',' + record.hpta_id + ',' + record.trta_id + ',' +
           std::to_string(record.count) + ',' + FormatDouble(record.spec) +
           ',' + FormatDouble(record.sim_origin) + ',' +
           FormatDouble(record.reward) + ',' + FormatDouble(record.sim_new) +
           '\n';
  }
  return out;
}

}  // namespace tracerank
