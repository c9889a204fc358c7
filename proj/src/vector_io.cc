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

#include <charconv>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tracerank/embedding.h"
#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

std::string LineRef(std::size_t line_number) {
  return "line " + std::to_string(line_number);
}

double ParseDouble(std::string_view field, std::size_t line_number) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto result = std::from_chars(field.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::kFormatError,
                LineRef(line_number) + ": bad number '" + std::string(field) +
                    "'");
  }
  return value;
}

std::size_t ParseCount(std::string_view field, std::size_t line_number) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  const auto result = std::from_chars(field.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw Error(ErrorCode::kFormatError,
                LineRef(line_number) + ": bad integer '" + std::string(field) +
                    "'");
  }
  return value;
}

bool IsUnsignedInteger(std::string_view field) {
  if (field.empty()) return false;
  for (char c : field) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

EmbeddingMatrix ParseVectors(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kFormatError, "line 1: missing VEC header");
  }
  const auto header = SplitWhitespace(lines[0]);
  if (header.size() != 4 || header[0] != "VEC" || header[1] != "1") {
    throw Error(ErrorCode::kFormatError,
                "line 1: expected 'VEC 1 <count> <dim>'");
  }
  const std::size_t count = ParseCount(header[2], 1);
  const std::size_t dim = ParseCount(header[3], 1);
  if (dim == 0) throw Error(ErrorCode::kFormatError, "line 1: dim is 0");
  if (lines.size() - 1 != count) {
    throw Error(ErrorCode::kFormatError,
                "header declares " + std::to_string(count) + " rows, file has " +
                    std::to_string(lines.size() - 1));
  }

  std::vector<std::string> ids;
  std::vector<double> values;
  ids.reserve(count);
  values.reserve(count * dim);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_number = i + 1;
    const std::string_view line = lines[i];
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw Error(ErrorCode::kFormatError,
                  LineRef(line_number) + ": expected '<id>\\t<values>'");
    }
    std::string id(line.substr(0, tab));
    const auto fields = SplitWhitespace(line.substr(tab + 1));
    if (fields.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  LineRef(line_number) + ": expected " + std::to_string(dim) +
                      " values, got " + std::to_string(fields.size()),
                  id);
    }
    for (const auto field : fields) {
      values.push_back(ParseDouble(field, line_number));
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kFormatError,
                  LineRef(line_number) + ": duplicate id '" + id + "'", id);
    }
    ids.push_back(std::move(id));
  }
  return EmbeddingMatrix(std::move(ids), dim, std::move(values));
}

std::string FormatVectors(const EmbeddingMatrix& matrix) {
  std::string out = "VEC 1 " + std::to_string(matrix.rows()) + " " +
                    std::to_string(matrix.dim()) + "\n";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out += matrix.ids()[i];
    out += '\t';
    const auto row = matrix.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ' ';
      out += FormatDouble(row[k]);
    }
    out += '\n';
  }
  return out;
}

void WriteVectors(const std::filesystem::path& file,
                  const EmbeddingMatrix& matrix) {
  WriteFileOrThrow(file, FormatVectors(matrix));
}

EmbeddingMatrix LoadVectors(const std::filesystem::path& file,
                            std::span<const std::string> expected_ids) {
  try {
    return ParseVectors(ReadFileOrThrow(file)).Select(expected_ids);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMissingFile) throw;
    throw e.WithContext(file.string());
  }
}

WordVectorTable ParseWordVectorTable(std::string_view text) {
  const auto lines = SplitLines(text);
  WordVectorTable table;
  std::size_t first = 0;
  std::size_t declared_count = 0;
  bool has_header = false;
  if (!lines.empty()) {
    const auto fields = SplitWhitespace(lines[0]);
    if (fields.size() == 2 && IsUnsignedInteger(fields[0]) &&
        IsUnsignedInteger(fields[1])) {
      has_header = true;
      declared_count = ParseCount(fields[0], 1);
      table.dim = ParseCount(fields[1], 1);
      if (table.dim == 0) {
        throw Error(ErrorCode::kFormatError, "line 1: dim is 0");
      }
      first = 1;
    }
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    const std::size_t line_number = i + 1;
    const auto fields = SplitWhitespace(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw Error(ErrorCode::kDimensionMismatch,
                  LineRef(line_number) + ": word without a vector",
                  std::string(fields[0]));
    }
    const std::string word(fields[0]);
    if (table.dim == 0) table.dim = fields.size() - 1;
    if (fields.size() - 1 != table.dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  LineRef(line_number) + ": expected " +
                      std::to_string(table.dim) + " values for '" + word +
                      "', got " + std::to_string(fields.size() - 1),
                  word);
    }
    std::vector<double> vector;
    vector.reserve(table.dim);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      vector.push_back(ParseDouble(fields[k], line_number));
    }
    if (!table.entries.emplace(word, std::move(vector)).second) {
      throw Error(ErrorCode::kFormatError,
                  LineRef(line_number) + ": duplicate word '" + word + "'",
                  word);
    }
  }
  if (table.entries.empty()) {
    throw Error(ErrorCode::kFormatError, "word-vector table has no entries");
  }
  if (has_header && declared_count != table.entries.size()) {
    throw Error(ErrorCode::kFormatError,
                "header declares " + std::to_string(declared_count) +
                    " words, file has " + std::to_string(table.entries.size()));
  }
  return table;
}

WordVectorTable LoadWordVectorTable(const std::filesystem::path& file) {
  return ParseWordVectorTable(ReadFileOrThrow(file));
}

}  // namespace tracerank
