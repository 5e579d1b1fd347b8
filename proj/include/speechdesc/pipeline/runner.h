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

#ifndef SPEECHDESC_PIPELINE_RUNNER_H_
#define SPEECHDESC_PIPELINE_RUNNER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "speechdesc/attributes/annotate.h"
#include "speechdesc/binning/binning.h"
#include "speechdesc/caption/backends.h"
#include "speechdesc/errors.h"
#include "speechdesc/evaluation/report.h"
#include "speechdesc/pipeline/checkpoint.h"
#include "speechdesc/pipeline/config.h"

namespace speechdesc {

// Raised by the crash hook; the journal is left as an interrupted run would
// leave it.
class InjectedCrash : public Error {
 public:
  using Error::Error;
};

enum class CrashMode { kThrow, kExit };

struct RunOptions {
  bool resume = false;
  // Stop after this many newly journaled utterances.
  std::optional<std::size_t> crash_after;
  CrashMode crash_mode = CrashMode::kThrow;
  AnnotatorOptions annotator;
  // Override the configured backends; not owned.
  CompletionBackend* completion = nullptr;
  TranslationBackend* translation = nullptr;
};

struct RunReport {
  std::string fingerprint;
  std::string binning_version;
  std::string grammar_version;
  std::size_t total = 0;
  std::size_t annotated = 0;
  std::size_t failed = 0;
  std::size_t resumed = 0;  // taken from the journal
  std::size_t journal_lines_dropped = 0;
  std::vector<SkippedLine> skipped_manifest_lines;
  std::vector<FailureEntry> failures;
  std::vector<std::string> notes;
  double elapsed_s = 0.0;

  nlohmann::json ToJson() const;
};

// Writes config.output (sorted by utterance_id), the failure log and the
// run report. Throws ConfigError for an invalid config, duplicate
// utterance_ids, or a journal written under a different fingerprint.
RunReport RunAnnotate(const PipelineConfig& config, const RunOptions& options = {});

struct LanguageStats {
  std::size_t utterances = 0;
  double hours = 0.0;
  std::size_t missing_duration = 0;
};

struct StatsReport {
  std::map<std::string, LanguageStats> languages;
  // Attribute name -> label -> count. Includes gender and style.
  std::map<std::string, std::map<std::string, std::size_t>> histograms;
  std::vector<SkippedLine> skipped;

  nlohmann::json ToJson() const;
  // Tab-separated, one row per language then one per (attribute, label).
  std::string ToTable() const;
};

StatsReport RunStats(const std::filesystem::path& annotated_manifest);
StatsReport ComputeStats(std::span<const AnnotatedRecord> records);

struct CaptionRunOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> grammar;
  // When set, labels are recomputed from the stored measurements.
  std::optional<std::filesystem::path> binning_config;
  std::uint64_t seed = 0;
};

// Re-captions an annotated manifest; returns the number of records written.
std::size_t RunCaption(const CaptionRunOptions& options);

FitResult RunFitBins(const std::vector<std::filesystem::path>& annotated_manifests,
                     const std::filesystem::path& output,
                     const FitOptions& options = {});

struct EvaluateOptions {
  std::filesystem::path reference_manifest;  // annotated; optional for fixture-only runs
  std::optional<std::filesystem::path> synthesized_dir;  // <utterance_id>.wav
  std::optional<std::filesystem::path> binning_config;
  std::optional<std::filesystem::path> asr_hypotheses;  // {"utterance_id", "hypothesis"}
  std::optional<std::filesystem::path> label_pairs;
  std::optional<std::filesystem::path> judgments;
  std::vector<std::string> confusion_classes;  // empty: the emotion set
  std::optional<std::filesystem::path> ratings;
  std::optional<std::filesystem::path> external_metrics;  // {"mos", "s_sim"}
  int workers = 1;
  int sample_rate_hz = 16000;
  AnnotatorOptions annotator;
};

std::vector<std::string> DefaultConfusionClasses();

EvaluationReport RunEvaluate(const EvaluateOptions& options);

}  // namespace speechdesc

#endif  // SPEECHDESC_PIPELINE_RUNNER_H_
