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

#ifndef SPEECHDESC_PIPELINE_CHECKPOINT_H_
#define SPEECHDESC_PIPELINE_CHECKPOINT_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "speechdesc/corpus/manifest.h"
#include "speechdesc/types.h"

namespace speechdesc {

struct FailureEntry {
  std::string utterance_id;
  std::string stage;  // "load", "annotate", "caption", ...
  std::string error;

  bool operator==(const FailureEntry&) const = default;
};

nlohmann::json ToJson(const FailureEntry& failure);
FailureEntry FailureEntryFromJson(const nlohmann::json& json);

// Append-only journal: a header line with the config fingerprint, then one
// line per finished utterance. A torn final line from an interrupted write is
// dropped when the journal is reopened.
class Checkpoint {
 public:
  // Starts a fresh journal, or with resume set, loads an existing one and
  // throws ConfigError when its fingerprint differs.
  static std::unique_ptr<Checkpoint> Open(const std::filesystem::path& path,
                         const std::string& fingerprint, bool resume);

  const std::map<std::string, AnnotatedRecord>& completed() const { return completed_; }
  const std::map<std::string, FailureEntry>& failures() const { return failures_; }
  std::size_t dropped_lines() const { return dropped_lines_; }
  bool Contains(const std::string& utterance_id) const {
    return completed_.contains(utterance_id) || failures_.contains(utterance_id);
  }

  // Thread-safe; the line is flushed before returning.
  void RecordSuccess(const AnnotatedRecord& record);
  void RecordFailure(const FailureEntry& failure);

 private:
  Checkpoint() = default;

  std::map<std::string, AnnotatedRecord> completed_;
  std::map<std::string, FailureEntry> failures_;
  std::size_t dropped_lines_ = 0;
  std::unique_ptr<LineWriter> writer_;
  std::mutex mu_;
};

}  // namespace speechdesc

#endif  // SPEECHDESC_PIPELINE_CHECKPOINT_H_
