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

#include "tracerank/similarity.h"

#include <algorithm>
#include <cmath>

#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {

void SortRanked(std::vector<ScoredId>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ScoredId& a, const ScoredId& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.id < b.id;
                   });
}

double Cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of vectors with " + std::to_string(u.size()) + " and " +
                    std::to_string(v.size()) + " entries");
  }
  double dot = 0.0;
  double norm_u = 0.0;
  double norm_v = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    norm_u += u[i] * u[i];
    norm_v += v[i] * v[i];
  }
  if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(norm_u * norm_v), -1.0, 1.0);
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> row_ids,
                                   std::vector<std::string> col_ids,
                                   std::vector<double> values)
    : row_ids_(std::move(row_ids)),
      col_ids_(std::move(col_ids)),
      values_(std::move(values)) {
  if (values_.size() != row_ids_.size() * col_ids_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "similarity matrix shape does not match its id lists");
  }
}

SimilarityMatrix SaTaMatrix(const EmbeddingMatrix& sa,
                            const EmbeddingMatrix& ta) {
  if (sa.dim() != ta.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "source dim " + std::to_string(sa.dim()) + " != target dim " +
                    std::to_string(ta.dim()));
  }
  std::vector<double> values;
  values.reserve(sa.rows() * ta.rows());
  for (std::size_t i = 0; i < sa.rows(); ++i) {
    for (std::size_t j = 0; j < ta.rows(); ++j) {
      values.push_back(Cosine(sa.row(i), ta.row(j)));
    }
  }
  return SimilarityMatrix(sa.ids(), ta.ids(), std::move(values));
}

RankedLists SaTaLists(const SimilarityMatrix& matrix) {
  RankedLists lists;
  for (std::size_t i = 0; i < matrix.row_ids().size(); ++i) {
    RankedList list{matrix.row_ids()[i], {}};
    list.entries.reserve(matrix.col_ids().size());
    for (std::size_t j = 0; j < matrix.col_ids().size(); ++j) {
      list.entries.push_back({matrix.col_ids()[j], matrix.at(i, j)});
    }
    SortRanked(list.entries);
    lists.emplace(list.owner_id, std::move(list));
  }
  return lists;
}

RankedLists TaTaLists(const EmbeddingMatrix& ta) {
  const std::size_t m = ta.rows();
  RankedLists lists;
  for (std::size_t i = 0; i < m; ++i) {
    RankedList list{ta.ids()[i], {}};
    list.entries.reserve(m > 0 ? m - 1 : 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      list.entries.push_back({ta.ids()[j], Cosine(ta.row(i), ta.row(j))});
    }
    SortRanked(list.entries);
    lists.emplace(list.owner_id, std::move(list));
  }
  return lists;
}

std::string FormatSimilarityCsv(const SimilarityMatrix& matrix) {
  std::string out = "id";
  for (const auto& id : matrix.col_ids()) {
    out += ',';
    out += id;
  }
  out += '\n';
  for (std::size_t i = 0; i < matrix.row_ids().size(); ++i) {
    out += matrix.row_ids()[i];
    for (const double value : matrix.row(i)) {
      out += ',';
      out += FormatDouble(value);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tracerank
