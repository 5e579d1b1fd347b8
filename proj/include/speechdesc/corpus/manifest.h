// Copyright 2026 The speechdesc Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPEECHDESC_CORPUS_MANIFEST_H_
#define SPEECHDESC_CORPUS_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "speechdesc/errors.h"
#include "speechdesc/types.h"

namespace speechdesc {

// Manifests are UTF-8 JSON lines, one record per physical line.

struct SkippedLine {
  std::size_t line_number = 0;  // 1-based
  std::string reason;
};

template <typename Record>
struct ManifestContents {
  std::vector<Record> records;
  std::vector<SkippedLine> skipped;
};

// Malformed lines are skipped and reported; an unreadable file throws
// IoError and duplicate utterance ids throw ValidationError.
ManifestContents<UtteranceRecord> ReadManifest(const std::filesystem::path& path);
ManifestContents<AnnotatedRecord> ReadAnnotatedManifest(
    const std::filesystem::path& path);

void WriteAnnotatedManifest(std::span<const AnnotatedRecord> records,
                            const std::filesystem::path& path);

// Field codecs. The *FromJson functions throw ValidationError naming the
// offending field.
nlohmann::json ToJson(const UtteranceRecord& record);
nlohmann::json ToJson(const AcousticAttributes& attributes);
nlohmann::json ToJson(const AttributeLabels& labels);
nlohmann::json ToJson(const CaptionSet& captions);
nlohmann::json ToJson(const AnnotatedRecord& record);

UtteranceRecord UtteranceRecordFromJson(const nlohmann::json& json);
AcousticAttributes AcousticAttributesFromJson(const nlohmann::json& json);
AttributeLabels AttributeLabelsFromJson(const nlohmann::json& json);
CaptionSet CaptionSetFromJson(const nlohmann::json& json);
AnnotatedRecord AnnotatedRecordFromJson(const nlohmann::json& json);

// Compact single-line rendering; control characters are escaped.
std::string ToJsonLine(const nlohmann::json& json);

// Calls `fn(line_number, line)` for every non-blank line. Throws IoError when
// the file cannot be opened.
template <typename Fn>
void ForEachLine(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    fn(number, line);
  }
  if (in.bad()) throw IoError("read failure on " + path.string());
}

// Append-only line writer. Appends from many threads are serialized; each
// line is flushed before Append returns.
class LineWriter {
 public:
  LineWriter(const std::filesystem::path& path, bool append);
  void Append(const std::string& line);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::mutex mu_;
};

}  // namespace speechdesc

#endif  // SPEECHDESC_CORPUS_MANIFEST_H_
