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

#ifndef TRACERANK_CORPUS_H_
#define TRACERANK_CORPUS_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tracerank {

enum class Role { kSource, kTarget };

struct Artifact {
  std::string id;
  Role role = Role::kSource;
  std::string text;

  bool operator==(const Artifact&) const = default;
};

struct Link {
  std::string source_id;
  std::string target_id;

  auto operator<=>(const Link&) const = default;
};

using AnswerSet = std::set<Link>;

// Ids must match [A-Za-z0-9_.-]+.
bool IsValidArtifactId(std::string_view id);

// Source artifacts, target artifacts, and gold links of one dataset.
// Immutable once built. Both artifact lists are held in canonical order
// (byte-wise lexicographic by id) and every index handed out refers to that
// order.
class Corpus {
 public:
  // Validates and canonicalizes. Throws Error with kInvalidId, kEmptyArtifact,
  // kDuplicateId, kDuplicateLink, kDanglingAnswerId, or kInvalidArgument
  // (fewer than 1 source or 2 targets).
  static Corpus Create(std::vector<Artifact> sources,
                       std::vector<Artifact> targets,
                       const std::vector<Link>& links);

  const std::vector<Artifact>& sources() const { return sources_; }
  const std::vector<Artifact>& targets() const { return targets_; }
  const AnswerSet& answers() const { return answers_; }

  std::vector<std::string> source_ids() const;
  std::vector<std::string> target_ids() const;

  std::optional<std::size_t> SourceIndex(std::string_view id) const;
  std::optional<std::size_t> TargetIndex(std::string_view id) const;

  bool operator==(const Corpus&) const = default;

 private:
  Corpus() = default;

  std::vector<Artifact> sources_;
  std::vector<Artifact> targets_;
  AnswerSet answers_;
  std::map<std::string, std::size_t, std::less<>> source_index_;
  std::map<std::string, std::size_t, std::less<>> target_index_;
};

// Reads `<id>.txt` files from both directories plus a TSV answer file.
Corpus LoadCorpus(const std::filesystem::path& source_dir,
                  const std::filesystem::path& target_dir,
                  const std::filesystem::path& answers_file);

// Reads every `<id>.txt` in `dir`. Other files are ignored.
std::vector<Artifact> LoadArtifactDirectory(const std::filesystem::path& dir,
                                            Role role);

// `source_id<TAB>target_id` per line; blank lines and `#` comments skipped.
std::vector<Link> ParseAnswerSet(std::string_view text);

// Gold-linked targets of one source; empty when the source has no links.
// Throws kUnknownSourceId.
std::set<std::string> GoldTargets(const Corpus& corpus,
                                  std::string_view source_id);

struct DatasetManifest {
  std::filesystem::path sources;
  std::filesystem::path targets;
  std::filesystem::path answers;
};

// Plain `key=value` file with keys sources, targets, answers. Relative paths
// resolve against the manifest's directory.
DatasetManifest LoadDatasetManifest(const std::filesystem::path& file);

}  // namespace tracerank

#endif  // TRACERANK_CORPUS_H_
