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

#ifndef TRACERANK_SIMILARITY_H_
#define TRACERANK_SIMILARITY_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tracerank/embedding.h"

namespace tracerank {

struct ScoredId {
  std::string id;
  double score = 0.0;

  bool operator==(const ScoredId&) const = default;
};

// Candidates ordered by descending score; equal scores by ascending id.
struct RankedList {
  std::string owner_id;
  std::vector<ScoredId> entries;

  bool operator==(const RankedList&) const = default;
};

// Keyed by owner id, so iteration follows canonical order.
using RankedLists = std::map<std::string, RankedList>;

// Sorts by descending score, ties by ascending id.
void SortRanked(std::vector<ScoredId>& entries);

// Cosine similarity (u.v)/(|u||v|), clamped to [-1, 1]. Zero if either vector
// is all zeros. Throws kDimensionMismatch.
double Cosine(std::span<const double> u, std::span<const double> v);

class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<std::string> row_ids,
                   std::vector<std::string> col_ids,
                   std::vector<double> values);

  const std::vector<std::string>& row_ids() const { return row_ids_; }
  const std::vector<std::string>& col_ids() const { return col_ids_; }
  double at(std::size_t row, std::size_t col) const {
    return values_[row * col_ids_.size() + col];
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * col_ids_.size(), col_ids_.size()};
  }

 private:
  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<double> values_;
};

// values[i][j] = Cosine(sa.row(i), ta.row(j)).
SimilarityMatrix SaTaMatrix(const EmbeddingMatrix& sa,
                            const EmbeddingMatrix& ta);

// One descending list of every target per source row.
RankedLists SaTaLists(const SimilarityMatrix& matrix);

// For every target, the other m-1 targets ranked by similarity to it.
RankedLists TaTaLists(const EmbeddingMatrix& ta);

// Header `id,<col ids>`, then `<row id>,<values>` with 17 significant digits.
std::string FormatSimilarityCsv(const SimilarityMatrix& matrix);

}  // namespace tracerank

#endif  // TRACERANK_SIMILARITY_H_
