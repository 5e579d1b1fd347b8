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

#include "speechdesc/pipeline/config.h"

#include <fstream>

#include "speechdesc/errors.h"
#include "speechdesc/util/hash.h"

namespace speechdesc {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path Resolve(const fs::path& base, const std::string& value) {
  fs::path p(value);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

}  // namespace

PipelineConfig PipelineConfig::FromJson(const json& j, const fs::path& base_dir) {
  PipelineConfig c;
  try {
    if (j.contains("corpus_root") && !j["corpus_root"].get<std::string>().empty()) {
      c.corpus_root = Resolve(base_dir, j["corpus_root"].get<std::string>());
    }
    if (j.contains("manifests")) {
      for (const auto& m : j["manifests"]) {
        c.manifests.push_back(Resolve(base_dir, m.get<std::string>()));
      }
    }
    c.sample_rate_hz = j.value("sample_rate_hz", c.sample_rate_hz);
    c.workers = j.value("workers", c.workers);
    c.seed = j.value("seed", c.seed);
    if (j.contains("binning_config")) {
      c.binning_config = Resolve(base_dir, j["binning_config"].get<std::string>());
    }
    if (j.contains("grammar")) c.grammar = Resolve(base_dir, j["grammar"].get<std::string>());
    if (j.contains("prompt_template")) {
      c.prompt_template = Resolve(base_dir, j["prompt_template"].get<std::string>());
    }
    if (j.contains("caption_generator")) {
      const std::string g = j["caption_generator"].get<std::string>();
      auto parsed = ParseCaptionGenerator(g);
      if (!parsed) throw ConfigError("unknown caption_generator '" + g + "'");
      c.caption_generator = *parsed;
    }
    c.translate = j.value("translate", c.translate);
    if (j.contains("output")) c.output = Resolve(base_dir, j["output"].get<std::string>());
    if (j.contains("checkpoint")) {
      c.checkpoint = Resolve(base_dir, j["checkpoint"].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("pipeline config: ") + e.what());
  }
  c.llm_endpoint = HttpEndpoint::FromEnvironment("SPEECHDESC_LLM");
  c.translation_endpoint = HttpEndpoint::FromEnvironment("SPEECHDESC_TRANSLATE");
  return c;
}

PipelineConfig PipelineConfig::Load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pipeline config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("pipeline config " + path.string() + ": " + e.what());
  }
  return FromJson(j, path.parent_path());
}

json PipelineConfig::ToJson() const {
  json j;
  j["corpus_root"] = corpus_root.string();
  json manifest_list = json::array();
  for (const auto& m : manifests) manifest_list.push_back(m.string());
  j["manifests"] = manifest_list;
  j["sample_rate_hz"] = sample_rate_hz;
  j["workers"] = workers;
  j["seed"] = seed;
  if (binning_config) j["binning_config"] = binning_config->string();
  if (grammar) j["grammar"] = grammar->string();
  if (prompt_template) j["prompt_template"] = prompt_template->string();
  j["caption_generator"] = std::string(ToString(caption_generator));
  j["translate"] = translate;
  j["output"] = output.string();
  j["checkpoint"] = CheckpointPath().string();
  return j;
}

void PipelineConfig::Validate() const {
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (sample_rate_hz < 8000) throw ConfigError("sample_rate_hz must be at least 8000");
  if (manifests.empty()) throw ConfigError("no manifests configured");
  for (const auto& m : manifests) {
    if (!fs::exists(m)) throw ConfigError("manifest not found: " + m.string());
  }
  if (!corpus_root.empty() && !fs::is_directory(corpus_root)) {
    throw ConfigError("corpus_root is not a directory: " + corpus_root.string());
  }
  for (const auto* p : {&binning_config, &grammar, &prompt_template}) {
    if (*p && !fs::exists(**p)) throw ConfigError("file not found: " + (*p)->string());
  }
  if (output.empty()) throw ConfigError("output path is empty");
}

fs::path PipelineConfig::CheckpointPath() const {
  return checkpoint ? *checkpoint : fs::path(output.string() + ".journal");
}

fs::path PipelineConfig::FailureLogPath() const {
  return fs::path(output.string() + ".failures.jsonl");
}

fs::path PipelineConfig::ReportPath() const {
  return fs::path(output.string() + ".report.json");
}

std::string PipelineConfig::Fingerprint(const std::string& binning_digest,
                                        const std::string& grammar_version) const {
  json j;
  json manifest_list = json::array();
  for (const auto& m : manifests) manifest_list.push_back(m.lexically_normal().string());
  j["manifests"] = manifest_list;
  j["corpus_root"] = corpus_root.lexically_normal().string();
  j["sample_rate_hz"] = sample_rate_hz;
  j["seed"] = seed;
  j["binning"] = binning_digest;
  j["grammar"] = grammar_version;
  j["caption_generator"] = std::string(ToString(caption_generator));
  j["translate"] = translate;
  if (prompt_template) j["prompt_template"] = prompt_template->string();
  return HexDigest(Fnv1a64(j.dump()));
}

}  // namespace speechdesc
