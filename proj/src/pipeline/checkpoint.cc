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

#include "speechdesc/pipeline/checkpoint.h"

#include <fstream>
#include <iterator>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

}  // namespace

json ToJson(const FailureEntry& f) {
  return {{"utterance_id", f.utterance_id}, {"stage", f.stage}, {"error", f.error}};
}

FailureEntry FailureEntryFromJson(const json& j) {
  FailureEntry f;
  f.utterance_id = j.at("utterance_id").get<std::string>();
  f.stage = j.value("stage", "");
  f.error = j.value("error", "");
  return f;
}

std::unique_ptr<Checkpoint> Checkpoint::Open(const fs::path& path, const std::string& fingerprint,
                            bool resume) {
  std::unique_ptr<Checkpoint> owner(new Checkpoint());
  Checkpoint& cp = *owner;
  if (resume && fs::exists(path)) {
    std::string content;
    {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw IoError("cannot open checkpoint " + path.string());
      content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    // Anything after the last newline is a torn write.
    const std::size_t keep = content.rfind('\n') == std::string::npos
                                 ? 0
                                 : content.rfind('\n') + 1;
    if (keep < content.size()) {
      ++cp.dropped_lines_;
      content.resize(keep);
      fs::resize_file(path, keep);
    }
    std::size_t pos = 0;
    bool header = true;
    while (pos < content.size()) {
      const std::size_t nl = content.find('\n', pos);
      const std::string line = content.substr(pos, nl - pos);
      pos = nl + 1;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception&) {
        if (header) throw ConfigError("checkpoint " + path.string() + " has no header");
        ++cp.dropped_lines_;
        continue;
      }
      if (header) {
        const std::string found = j.value("fingerprint", "");
        if (found != fingerprint) {
          throw ConfigError("checkpoint fingerprint mismatch: journal has '" + found +
                            "', configuration gives '" + fingerprint + "'");
        }
        header = false;
        continue;
      }
      try {
        if (j.contains("record")) {
          AnnotatedRecord r = AnnotatedRecordFromJson(j["record"]);
          std::string id = r.record.utterance_id;
          cp.failures_.erase(id);
          cp.completed_[id] = std::move(r);
        } else if (j.contains("failure")) {
          FailureEntry f = FailureEntryFromJson(j["failure"]);
          cp.failures_[f.utterance_id] = std::move(f);
        } else {
          ++cp.dropped_lines_;
        }
      } catch (const std::exception&) {
        ++cp.dropped_lines_;
      }
    }
    if (header) {
      // An empty journal: start over with a header.
      cp.writer_ = std::make_unique<LineWriter>(path, false);
      cp.writer_->Append(ToJsonLine(json{{"fingerprint", fingerprint}}));
    } else {
      cp.writer_ = std::make_unique<LineWriter>(path, true);
    }
    return owner;
  }
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  cp.writer_ = std::make_unique<LineWriter>(path, false);
  cp.writer_->Append(ToJsonLine(json{{"fingerprint", fingerprint}}));
  return owner;
}

void Checkpoint::RecordSuccess(const AnnotatedRecord& record) {
  const std::string line = ToJsonLine(json{{"record", ToJson(record)}});
  std::lock_guard<std::mutex> lock(mu_);
  writer_->Append(line);
  failures_.erase(record.record.utterance_id);
  completed_[record.record.utterance_id] = record;
}

void Checkpoint::RecordFailure(const FailureEntry& failure) {
  const std::string line = ToJsonLine(json{{"failure", ToJson(failure)}});
  std::lock_guard<std::mutex> lock(mu_);
  writer_->Append(line);
  failures_[failure.utterance_id] = failure;
}

}  // namespace speechdesc
