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

#ifndef SPEECHDESC_PIPELINE_CONFIG_H_
#define SPEECHDESC_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "speechdesc/caption/backends.h"

namespace speechdesc {

// JSON file layout (all keys optional except "manifests"):
// {
//   "corpus_root": "audio/", "manifests": ["train.jsonl"],
//   "sample_rate_hz": 16000, "workers": 4, "seed": 0,
//   "binning_config": "bins.json", "grammar": "grammar.json",
//   "prompt_template": "prompt.txt", "caption_generator": "template",
//   "translate": false, "output": "annotated.jsonl", "checkpoint": "..."
// }
// Relative paths resolve against the directory of the config file.
struct PipelineConfig {
  std::filesystem::path corpus_root;  // empty: each manifest's directory
  std::vector<std::filesystem::path> manifests;
  int sample_rate_hz = 16000;
  int workers = 1;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> binning_config;
  std::optional<std::filesystem::path> grammar;
  std::optional<std::filesystem::path> prompt_template;
  CaptionGenerator caption_generator = CaptionGenerator::kTemplate;
  bool translate = false;
  std::filesystem::path output = "annotated.jsonl";
  std::optional<std::filesystem::path> checkpoint;  // default <output>.journal
  // Read from SPEECHDESC_LLM_* and SPEECHDESC_TRANSLATE_* at load time.
  std::optional<HttpEndpoint> llm_endpoint;
  std::optional<HttpEndpoint> translation_endpoint;

  static PipelineConfig FromJson(const nlohmann::json& json,
                                 const std::filesystem::path& base_dir = {});
  static PipelineConfig Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // Throws ConfigError for workers < 1, an unsupported rate, or a referenced
  // file that does not exist.
  void Validate() const;

  std::filesystem::path CheckpointPath() const;
  std::filesystem::path FailureLogPath() const;
  std::filesystem::path ReportPath() const;

  // Hash of every setting that can change the output, plus the binning and
  // grammar versions. Worker count and output paths are excluded.
  std::string Fingerprint(const std::string& binning_digest,
                          const std::string& grammar_version) const;
};

}  // namespace speechdesc

#endif  // SPEECHDESC_PIPELINE_CONFIG_H_
