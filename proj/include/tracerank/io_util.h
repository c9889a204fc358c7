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

#ifndef TRACERANK_IO_UTIL_H_
#define TRACERANK_IO_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tracerank {

// 17 significant digits, the width used by every data file.
std::string FormatDouble(double value);

// Shortest text that round-trips; used for grid coordinates like 0.03.
std::string FormatShortest(double value);

std::string ReadFileOrThrow(const std::filesystem::path& path);
void WriteFileOrThrow(const std::filesystem::path& path,
                      std::string_view contents);

bool IsValidUtf8(std::string_view text);

std::string_view Trim(std::string_view text);

// Splits on LF. A trailing newline does not produce an empty last line.
std::vector<std::string_view> SplitLines(std::string_view text);

// Splits on runs of spaces and tabs.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Quoted, escaped JSON string literal.
std::string JsonString(std::string_view text);

// Streaming JSON emitter. Keys come out in call order and doubles use
// FormatDouble, so identical inputs give identical bytes.
class JsonWriter {
 public:
  JsonWriter& BeginObject();
  JsonWriter& EndObject();
  JsonWriter& BeginArray();
  JsonWriter& EndArray();
  JsonWriter& Key(std::string_view key);
  JsonWriter& String(std::string_view value);
  JsonWriter& Number(double value);
  JsonWriter& Integer(long long value);
  JsonWriter& Bool(bool value);
  JsonWriter& Null();

  // Output with a trailing newline.
  std::string Finish() const { return out_ + "\n"; }

 private:
  void BeforeValue();
  void Open(char bracket);
  void Close(char bracket);

  std::string out_;
  std::vector<bool> has_items_;
  bool after_key_ = false;
};

}  // namespace tracerank

#endif  // TRACERANK_IO_UTIL_H_
