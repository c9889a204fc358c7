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

#include "tracerank/corpus.h"

#include <algorithm>
#include <utility>

#include "tracerank/error.h"
#include "tracerank/io_util.h"

namespace tracerank {
namespace {

void SortAndIndex(std::vector<Artifact>& artifacts,
                  std::map<std::string, std::size_t, std::less<>>& index,
                  Role role) {
  std::sort(artifacts.begin(), artifacts.end(),
            [](const Artifact& a, const Artifact& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    Artifact& artifact = artifacts[i];
    artifact.role = role;
    if (!IsValidArtifactId(artifact.id)) {
      throw Error(ErrorCode::kInvalidId,
                  "artifact id '" + artifact.id + "' is not [A-Za-z0-9_.-]+",
                  artifact.id);
    }
    if (Trim(artifact.text).empty()) {
      throw Error(ErrorCode::kEmptyArtifact,
                  "artifact '" + artifact.id + "' has no text", artifact.id);
    }
    if (!index.emplace(artifact.id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "artifact id '" + artifact.id + "' appears twice",
                  artifact.id);
    }
  }
}

}  // namespace

bool IsValidArtifactId(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

Corpus Corpus::Create(std::vector<Artifact> sources,
                      std::vector<Artifact> targets,
                      const std::vector<Link>& links) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "corpus needs at least one source artifact");
  }
  if (targets.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "corpus needs at least two target artifacts");
  }
  Corpus corpus;
  corpus.sources_ = std::move(sources);
  corpus.targets_ = std::move(targets);
  SortAndIndex(corpus.sources_, corpus.source_index_, Role::kSource);
  SortAndIndex(corpus.targets_, corpus.target_index_, Role::kTarget);

  for (const Link& link : links) {
    if (!corpus.source_index_.contains(link.source_id)) {
      throw Error(ErrorCode::kDanglingAnswerId,
                  "answer references unknown source '" + link.source_id + "'",
                  link.source_id);
    }
    if (!corpus.target_index_.contains(link.target_id)) {
      throw Error(ErrorCode::kDanglingAnswerId,
                  "answer references unknown target '" + link.target_id + "'",
                  link.target_id);
    }
    if (!corpus.answers_.insert(link).second) {
      throw Error(ErrorCode::kDuplicateLink,
                  "link " + link.source_id + " -> " + link.target_id +
                      " listed twice",
                  link.source_id + "\t" + link.target_id);
    }
  }
  return corpus;
}

std::vector<std::string> Corpus::source_ids() const {
  std::vector<std::string> ids;
  ids.reserve(sources_.size());
  for (const auto& a : sources_) ids.push_back(a.id);
  return ids;
}

std::vector<std::string> Corpus::target_ids() const {
  std::vector<std::string> ids;
  ids.reserve(targets_.size());
  for (const auto& a : targets_) ids.push_back(a.id);
  return ids;
}

std::optional<std::size_t> Corpus::SourceIndex(std::string_view id) const {
  auto it = source_index_.find(id);
  if (it == source_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Corpus::TargetIndex(std::string_view id) const {
  auto it = target_index_.find(id);
  if (it == target_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Artifact> LoadArtifactDirectory(const std::filesystem::path& dir,
                                            Role role) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kMissingFile,
                "artifact directory " + dir.string() + " does not exist",
                dir.string());
  }
  std::vector<Artifact> artifacts;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& path = entry.path();
    if (path.extension() != ".txt") continue;
    const std::string id = path.stem().string();
    if (id.empty() || id.front() == '.') continue;
    std::string text = ReadFileOrThrow(path);
    if (!IsValidUtf8(text)) {
      throw Error(ErrorCode::kInvalidEncoding,
                  path.string() + " is not valid UTF-8", id);
    }
    artifacts.push_back(Artifact{id, role, std::move(text)});
  }
  return artifacts;
}

std::vector<Link> ParseAnswerSet(std::string_view text) {
  std::vector<Link> links;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    const std::string where = "answers line " + std::to_string(line_number);
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kFormatError, where + ": expected a TAB");
    }
    const std::string_view source = line.substr(0, tab);
    const std::string_view target = line.substr(tab + 1);
    if (source.empty() || target.empty()) {
      throw Error(ErrorCode::kFormatError,
                  where + ": empty source or target id");
    }
    if (target.find('\t') != std::string_view::npos) {
      throw Error(ErrorCode::kFormatError, where + ": more than two fields");
    }
    links.push_back(Link{std::string(source), std::string(target)});
  }
  return links;
}

Corpus LoadCorpus(const std::filesystem::path& source_dir,
                  const std::filesystem::path& target_dir,
                  const std::filesystem::path& answers_file) {
  auto sources = LoadArtifactDirectory(source_dir, Role::kSource);
  auto targets = LoadArtifactDirectory(target_dir, Role::kTarget);
  const auto links = ParseAnswerSet(ReadFileOrThrow(answers_file));
  return Corpus::Create(std::move(sources), std::move(targets), links);
}

std::set<std::string> GoldTargets(const Corpus& corpus,
                                  std::string_view source_id) {
  if (!corpus.SourceIndex(source_id)) {
    throw Error(ErrorCode::kUnknownSourceId,
                "unknown source '" + std::string(source_id) + "'",
                std::string(source_id));
  }
  std::set<std::string> gold;
  const Link lower{std::string(source_id), ""};
  for (auto it = corpus.answers().lower_bound(lower);
       it != corpus.answers().end() && it->source_id == source_id; ++it) {
    gold.insert(it->target_id);
  }
  return gold;
}

DatasetManifest LoadDatasetManifest(const std::filesystem::path& file) {
  const std::string text = ReadFileOrThrow(file);
  const std::filesystem::path base = file.parent_path();
  DatasetManifest manifest;
  bool seen[3] = {false, false, false};
  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line =
        Trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kFormatError,
                  file.string() + " line " + std::to_string(line_number) +
                      ": expected key=value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::filesystem::path value{std::string(Trim(line.substr(eq + 1)))};
    const std::filesystem::path resolved =
        value.is_absolute() ? value : base / value;
    if (key == "sources") {
      manifest.sources = resolved;
      seen[0] = true;
    } else if (key == "targets") {
      manifest.targets = resolved;
      seen[1] = true;
    } else if (key == "answers") {
      manifest.answers = resolved;
      seen[2] = true;
    } else {
      throw Error(ErrorCode::kFormatError,
                  file.string() + ": unknown key '" + std::string(key) + "'",
                  std::string(key));
    }
  }
  if (!seen[0] || !seen[1] || !seen[2]) {
    throw Error(ErrorCode::kFormatError,
                file.string() + ": needs sources=, targets= and answers=");
  }
  return manifest;
}

}  // namespace tracerank
