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

#include "tracerank/embedding.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "tracerank/error.h"

namespace tracerank {

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> ids,
                                 std::size_t dim, std::vector<double> values)
    : ids_(std::move(ids)), dim_(dim), values_(std::move(values)) {
  if (dim_ == 0) {
    throw Error(ErrorCode::kFormatError, "embedding dim must be positive");
  }
  if (values_.size() != ids_.size() * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(ids_.size() * dim_) +
                    " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kFormatError,
                  "non-finite value in row of '" + ids_[i / dim_] + "'",
                  ids_[i / dim_]);
    }
  }
}

EmbeddingMatrix EmbeddingMatrix::Select(
    std::span<const std::string> ids) const {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < ids_.size(); ++i) index.emplace(ids_[i], i);
  std::vector<double> values;
  values.reserve(ids.size() * dim_);
  for (const std::string& id : ids) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorCode::kMissingVectorForId,
                  "no vector for id '" + id + "'", id);
    }
    const auto source = row(it->second);
    values.insert(values.end(), source.begin(), source.end());
  }
  return EmbeddingMatrix(std::vector<std::string>(ids.begin(), ids.end()),
                         dim_, std::move(values));
}

namespace {

std::vector<std::string> IdsOf(std::span<const Artifact> artifacts) {
  std::vector<std::string> ids;
  ids.reserve(artifacts.size());
  for (const auto& a : artifacts) ids.push_back(a.id);
  return ids;
}

}  // namespace

std::pair<EmbeddingMatrix, Vocabulary> EmbedTfidf(
    std::span<const Artifact> artifacts, const TokenizerOptions& options) {
  const std::size_t n_docs = artifacts.size();
  std::vector<std::map<std::string, std::size_t>> term_counts(n_docs);
  std::map<std::string, std::size_t> df;
  for (std::size_t d = 0; d < n_docs; ++d) {
    for (auto& token : Tokenize(artifacts[d].text, options)) {
      ++term_counts[d][std::move(token)];
    }
    for (const auto& [term, count] : term_counts[d]) ++df[term];
  }

  Vocabulary vocabulary;
  vocabulary.n_docs = n_docs;
  std::map<std::string_view, std::size_t> column;
  for (const auto& [term, freq] : df) {
    column.emplace(term, vocabulary.terms.size());
    vocabulary.terms.push_back(term);
    vocabulary.df.push_back(freq);
  }

  // An empty vocabulary still yields a valid (all-zero) one-column matrix.
  const std::size_t dim = std::max<std::size_t>(1, vocabulary.terms.size());
  std::vector<double> values(n_docs * dim, 0.0);
  for (std::size_t d = 0; d < n_docs; ++d) {
    for (const auto& [term, count] : term_counts[d]) {
      const std::size_t t = column.at(term);
      const double idf = std::log(static_cast<double>(n_docs) /
                                  static_cast<double>(vocabulary.df[t]));
      values[d * dim + t] = static_cast<double>(count) * idf;
    }
  }
  return {EmbeddingMatrix(IdsOf(artifacts), dim, std::move(values)),
          std::move(vocabulary)};
}

std::size_t DefaultLsiRank(std::size_t n_docs) {
  return std::clamp<std::size_t>(n_docs > 0 ? n_docs - 1 : 0, 1, 100);
}

LsiEmbedding EmbedLsi(std::span<const Artifact> artifacts, std::size_t rank,
                      const TokenizerOptions& options) {
  if (rank == 0) {
    throw Error(ErrorCode::kInvalidArgument, "LSI rank must be at least 1");
  }
  const EmbeddingMatrix tfidf = EmbedTfidf(artifacts, options).first;
  const auto n_docs = static_cast<Eigen::Index>(tfidf.rows());
  const auto n_terms = static_cast<Eigen::Index>(tfidf.dim());
  const Eigen::MatrixXd terms =
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                     Eigen::RowMajor>>(tfidf.values().data(),
                                                       n_docs, n_terms);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(terms, Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double tolerance = sigma.size() == 0
                               ? 0.0
                               : static_cast<double>(std::max(n_docs, n_terms)) *
                                     std::numeric_limits<double>::epsilon() *
                                     sigma(0);
  std::size_t numerical_rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tolerance) ++numerical_rank;
  }

  LsiEmbedding result;
  result.requested_rank = rank;
  result.numerical_rank = numerical_rank;
  result.rank_clamped = rank > numerical_rank;
  const std::size_t kept = std::min(rank, numerical_rank);
  const std::size_t dim = std::max<std::size_t>(kept, 1);

  // Rows are X V_r, equal to U_r S_r but exactly zero for an all-zero
  // TF-IDF row, so such documents keep cosine 0 to everything.
  std::vector<double> values(tfidf.rows() * dim, 0.0);
  if (kept > 0) {
    const Eigen::MatrixXd projected =
        terms * svd.matrixV().leftCols(static_cast<Eigen::Index>(kept));
    for (Eigen::Index d = 0; d < n_docs; ++d) {
      for (std::size_t k = 0; k < kept; ++k) {
        values[static_cast<std::size_t>(d) * dim + k] =
            projected(d, static_cast<Eigen::Index>(k));
      }
    }
  }
  result.matrix = EmbeddingMatrix(tfidf.ids(), dim, std::move(values));
  return result;
}

EmbeddingMatrix EmbedWordVectors(std::span<const Artifact> artifacts,
                                 const WordVectorTable& table,
                                 const TokenizerOptions& options) {
  if (table.entries.empty() || table.dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "word-vector table is empty");
  }
  const std::size_t dim = table.dim;
  std::vector<double> values(artifacts.size() * dim, 0.0);
  std::vector<double> sum(dim);
  for (std::size_t d = 0; d < artifacts.size(); ++d) {
    std::fill(sum.begin(), sum.end(), 0.0);
    std::size_t matched = 0;
    for (const auto& token : Tokenize(artifacts[d].text, options)) {
      auto it = table.entries.find(token);
      if (it == table.entries.end()) continue;
      for (std::size_t k = 0; k < dim; ++k) sum[k] += it->second[k];
      ++matched;
    }
    if (matched == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) {
      values[d * dim + k] = sum[k] / static_cast<double>(matched);
    }
  }
  return EmbeddingMatrix(IdsOf(artifacts), dim, std::move(values));
}

}  // namespace tracerank
