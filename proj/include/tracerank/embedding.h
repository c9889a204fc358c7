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

#ifndef TRACERANK_EMBEDDING_H_
#define TRACERANK_EMBEDDING_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tracerank/corpus.h"

namespace tracerank {

struct TokenizerOptions {
  bool stem = false;  // Porter stemming after stopword removal.
};

// Lowercases ASCII, splits on every ASCII character that is not a letter or
// digit, drops stopwords and single-byte tokens. Bytes >= 0x80 count as word
// characters so UTF-8 words stay whole.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options = {});

bool IsStopword(std::string_view token);

// Porter (1980) suffix stripping. Tokens holding anything other than a-z are
// returned unchanged.
std::string PorterStem(std::string_view word);

// Dense row-major matrix of finite doubles, one row per artifact id.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  // Throws kDimensionMismatch on a size mismatch and kFormatError on a
  // non-finite entry or a zero dim.
  EmbeddingMatrix(std::vector<std::string> ids, std::size_t dim,
                  std::vector<double> values);

  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return ids_.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  const std::vector<double>& values() const { return values_; }

  // Rows for `ids`, in that order. Throws kMissingVectorForId.
  EmbeddingMatrix Select(std::span<const std::string> ids) const;

  bool operator==(const EmbeddingMatrix&) const = default;

 private:
  std::vector<std::string> ids_;
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

struct Vocabulary {
  std::vector<std::string> terms;  // Sorted.
  std::vector<std::size_t> df;     // Parallel to terms.
  std::size_t n_docs = 0;
};

struct WordVectorTable {
  std::size_t dim = 0;
  std::unordered_map<std::string, std::vector<double>> entries;
};

// Raw term count times ln(n_docs / df). Rows follow `artifacts` order.
std::pair<EmbeddingMatrix, Vocabulary> EmbedTfidf(
    std::span<const Artifact> artifacts, const TokenizerOptions& options = {});

struct LsiEmbedding {
  EmbeddingMatrix matrix;
  std::size_t requested_rank = 0;
  std::size_t numerical_rank = 0;
  // Set when requested_rank exceeded the numerical rank of the term matrix.
  bool rank_clamped = false;
};

// min(100, n_docs - 1), at least 1.
std::size_t DefaultLsiRank(std::size_t n_docs);

// Truncated SVD of the TF-IDF document-term matrix; each row is U_r * S_r.
// An all-zero term matrix yields a single zero column.
LsiEmbedding EmbedLsi(std::span<const Artifact> artifacts, std::size_t rank,
                      const TokenizerOptions& options = {});

// Mean of the table vectors of the tokens found in the table.
EmbeddingMatrix EmbedWordVectors(std::span<const Artifact> artifacts,
                                 const WordVectorTable& table,
                                 const TokenizerOptions& options = {});

// Vector file: `VEC 1 <count> <dim>` header, then `<id>\t<v1> ... <vdim>`.
EmbeddingMatrix ParseVectors(std::string_view text);
std::string FormatVectors(const EmbeddingMatrix& matrix);
void WriteVectors(const std::filesystem::path& file,
                  const EmbeddingMatrix& matrix);
// Rows reordered to `expected_ids`; ids absent from the list are ignored.
EmbeddingMatrix LoadVectors(const std::filesystem::path& file,
                            std::span<const std::string> expected_ids);

WordVectorTable ParseWordVectorTable(std::string_view text);
WordVectorTable LoadWordVectorTable(const std::filesystem::path& file);

}  // namespace tracerank

#endif  // TRACERANK_EMBEDDING_H_
