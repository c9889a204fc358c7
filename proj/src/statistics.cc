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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tracerank/error.h"
#include "tracerank/evaluation.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

constexpr std::size_t kMinWilcoxonPairs = 5;
constexpr std::size_t kMaxExactPairs = 25;

// Exact two-sided p-value. Ranks are doubled so tied (half-integer) ranks
// stay integral; the null distribution of W+ comes from counting sign
// assignments per reachable rank sum.
double ExactWilcoxonP(const std::vector<std::int64_t>& doubled_ranks,
                      std::int64_t doubled_w_plus) {
  const std::int64_t total =
      std::accumulate(doubled_ranks.begin(), doubled_ranks.end(),
                      std::int64_t{0});
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  std::int64_t reach = 0;
  for (const std::int64_t rank : doubled_ranks) {
    reach += rank;
    for (std::int64_t s = reach; s >= rank; --s) {
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - rank)];
    }
  }
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  for (std::int64_t s = 0; s <= total; ++s) {
    const std::uint64_t count = ways[static_cast<std::size_t>(s)];
    if (s <= doubled_w_plus) lower += count;
    if (s >= doubled_w_plus) upper += count;
  }
  const double patterns = std::ldexp(1.0, static_cast<int>(doubled_ranks.size()));
  const double tail = static_cast<double>(std::min(lower, upper)) / patterns;
  return std::min(1.0, 2.0 * tail);
}

}  // namespace

WilcoxonResult WilcoxonSignedRank(std::span<const double> x,
                                  std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Wilcoxon needs paired samples of equal length");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }
  const std::size_t n = diffs.size();
  if (n < kMinWilcoxonPairs) {
    throw Error(ErrorCode::kTooFewPairs,
                std::to_string(n) + " non-zero differences, need at least " +
                    std::to_string(kMinWilcoxonPairs));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(diffs[a]) < std::abs(diffs[b]);
  });
  // Doubled average rank of a tie group spanning 1-based ranks [lo, hi] is
  // lo + hi.
  std::vector<std::int64_t> doubled(n);
  double tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) {
      ++j;
    }
    const auto value = static_cast<std::int64_t>(i + 1 + j + 1);
    for (std::size_t k = i; k <= j; ++k) doubled[order[k]] = value;
    const auto t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  WilcoxonResult result;
  result.n = n;
  std::int64_t doubled_plus = 0;
  std::int64_t doubled_minus = 0;
  for (std::size_t i = 0; i < n; ++i) {
    (diffs[i] > 0 ? doubled_plus : doubled_minus) += doubled[i];
  }
  result.w_plus = static_cast<double>(doubled_plus) / 2.0;
  result.w_minus = static_cast<double>(doubled_minus) / 2.0;

  if (n <= kMaxExactPairs) {
    result.exact = true;
    result.p_value = ExactWilcoxonP(doubled, doubled_plus);
    return result;
  }
  const auto nd = static_cast<double>(n);
  const double mean = nd * (nd + 1.0) / 4.0;
  const double variance =
      nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
  if (variance <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double deviation = result.w_plus - mean;
  const double corrected =
      deviation - (deviation > 0 ? 0.5 : (deviation < 0 ? -0.5 : 0.0));
  const double z = corrected / std::sqrt(variance);
  result.p_value = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
  return result;
}

std::string_view EffectMagnitudeName(EffectMagnitude magnitude) {
  switch (magnitude) {
    case EffectMagnitude::kNegligible: return "negligible";
    case EffectMagnitude::kSmall: return "small";
    case EffectMagnitude::kMedium: return "medium";
    case EffectMagnitude::kLarge: return "large";
  }
  return "unknown";
}

EffectMagnitude ClassifyEffect(double delta) {
  const double size = std::abs(delta);
  if (size < 0.147) return EffectMagnitude::kNegligible;
  if (size < 0.33) return EffectMagnitude::kSmall;
  if (size < 0.474) return EffectMagnitude::kMedium;
  return EffectMagnitude::kLarge;
}

CliffsDelta ComputeCliffsDelta(std::span<const double> x,
                               std::span<const double> y) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Cliff's delta needs two non-empty samples");
  }
  // Sorting y lets each x_i be placed with two binary searches.
  std::vector<double> sorted_y(y.begin(), y.end());
  std::sort(sorted_y.begin(), sorted_y.end());
  std::int64_t balance = 0;
  for (const double value : x) {
    const auto below = std::lower_bound(sorted_y.begin(), sorted_y.end(), value) -
                       sorted_y.begin();
    const auto above = sorted_y.end() -
                       std::upper_bound(sorted_y.begin(), sorted_y.end(), value);
    balance += below - above;
  }
  CliffsDelta result;
  result.delta = static_cast<double>(balance) /
                 (static_cast<double>(x.size()) * static_cast<double>(y.size()));
  result.magnitude = ClassifyEffect(result.delta);
  return result;
}

StatResult CompareSamples(std::span<const double> x,
                          std::span<const double> y) {
  StatResult stats;
  const CliffsDelta delta = ComputeCliffsDelta(x, y);
  stats.cliffs_delta = delta.delta;
  stats.magnitude = delta.magnitude;
  try {
    const WilcoxonResult test = WilcoxonSignedRank(x, y);
    stats.p_value = test.p_value;
    stats.n = test.n;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooFewPairs) throw;
    stats.degenerate_reason = e.detail();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      stats.n += x[i] != y[i] ? 1 : 0;
    }
  }
  return stats;
}

std::string FormatStatResultJson(const StatResult& stats) {
  JsonWriter json;
  json.BeginObject();
  json.Key("test").String("wilcoxon_signed_rank");
  json.Key("p_value");
  stats.p_value ? json.Number(*stats.p_value) : json.Null();
  json.Key("degenerate").Bool(!stats.p_value.has_value());
  json.Key("degenerate_reason").String(stats.degenerate_reason);
  json.Key("n").Integer(static_cast<long long>(stats.n));
  json.Key("cliffs_delta").Number(stats.cliffs_delta);
  json.Key("magnitude").String(EffectMagnitudeName(stats.magnitude));
  json.EndObject();
  return json.Finish();
}

}  // namespace tracerank
