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

// speechdesc: corpus annotation, captioning and evaluation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "speechdesc/errors.h"
#include "speechdesc/pipeline/config.h"
#include "speechdesc/pipeline/runner.h"

namespace {

namespace fs = std::filesystem;
using speechdesc::PipelineConfig;

template <typename T>
std::optional<fs::path> PathOr(const std::string& flag, const std::optional<T>& fallback) {
  if (!flag.empty()) return fs::path(flag);
  if (fallback) return fs::path(*fallback);
  return std::nullopt;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw speechdesc::IoError("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annotate speech corpora with acoustic attributes and captions"};
  app.require_subcommand(1);

  std::string config_path;
  int workers = 0;
  std::optional<std::uint64_t> seed;

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Run the annotation pipeline");
  bool resume = false;
  std::string output;
  std::size_t crash_after = 0;
  bool crash_exit = false;
  annotate->add_option("--config", config_path, "Pipeline config JSON")->required();
  annotate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  annotate->add_option("--seed", seed, "Caption seed");
  annotate->add_option("--output", output, "Output manifest");
  annotate->add_flag("--resume", resume, "Continue from the checkpoint journal");
  annotate->add_option("--crash-after", crash_after)->group("");
  annotate->add_flag("--crash-exit", crash_exit)->group("");

  // fit-bins
  auto* fit = app.add_subcommand("fit-bins", "Fit bin boundaries to an annotated corpus");
  std::vector<std::string> fit_inputs;
  std::string fit_output;
  std::size_t min_samples = 100;
  fit->add_option("--input", fit_inputs, "Annotated manifests")->required();
  fit->add_option("--output", fit_output, "Binning config to write")->required();
  fit->add_option("--min-samples", min_samples, "Smallest sample count per key");

  // caption
  auto* caption = app.add_subcommand("caption", "Regenerate captions for an annotated manifest");
  std::string cap_input, cap_output, grammar_path, bins_path;
  caption->add_option("--config", config_path, "Pipeline config JSON");
  caption->add_option("--input", cap_input, "Annotated manifest")->required();
  caption->add_option("--output", cap_output, "Output manifest")->required();
  caption->add_option("--grammar", grammar_path, "Template grammar JSON");
  caption->add_option("--bins", bins_path, "Re-bin with this binning config");
  caption->add_option("--seed", seed, "Caption seed");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate synthesized audio and ratings");
  speechdesc::EvaluateOptions eval;
  std::string eval_ref, synth_dir, asr, pairs, judgments, ratings, external, report_out;
  bool as_text = false;
  evaluate->add_option("--config", config_path, "Pipeline config JSON");
  evaluate->add_option("--reference", eval_ref, "Annotated reference manifest");
  evaluate->add_option("--synthesized", synth_dir, "Directory of <utterance_id>.wav");
  evaluate->add_option("--bins", bins_path, "Binning config");
  evaluate->add_option("--asr", asr, "ASR hypotheses JSONL");
  evaluate->add_option("--label-pairs", pairs, "Reference/candidate label pairs JSONL");
  evaluate->add_option("--judgments", judgments, "Emotion judgments JSONL");
  evaluate->add_option("--classes", eval.confusion_classes, "Confusion matrix classes");
  evaluate->add_option("--ratings", ratings, "MUSHRA ratings JSONL");
  evaluate->add_option("--external", external, "External metrics JSON (mos, s_sim)");
  evaluate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  evaluate->add_option("--output", report_out, "Report JSON to write");
  evaluate->add_flag("--text", as_text, "Print tables instead of JSON");

  // stats
  auto* stats = app.add_subcommand("stats", "Per-language durations and label histograms");
  std::string stats_input, stats_table;
  stats->add_option("--input", stats_input, "Annotated manifest")->required();
  stats->add_option("--table", stats_table, "Write the tab-separated table here");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<PipelineConfig> config;
    if (!config_path.empty()) config = PipelineConfig::Load(config_path);

    if (*annotate) {
      if (workers > 0) config->workers = workers;
      if (seed) config->seed = *seed;
      if (!output.empty()) config->output = output;
      speechdesc::RunOptions options;
      options.resume = resume;
      if (crash_after > 0) options.crash_after = crash_after;
      if (crash_exit) options.crash_mode = speechdesc::CrashMode::kExit;
      const auto report = speechdesc::RunAnnotate(*config, options);
      std::printf("annotated %zu of %zu (%zu failed, %zu resumed) -> %s\n", report.annotated,
                  report.total, report.failed, report.resumed, config->output.c_str());
      return 0;
    }
    if (*fit) {
      std::vector<fs::path> inputs(fit_inputs.begin(), fit_inputs.end());
      speechdesc::FitOptions options;
      options.min_samples = min_samples;
      const auto result = speechdesc::RunFitBins(inputs, fit_output, options);
      for (const auto& flag : result.flags) std::fprintf(stderr, "%s\n", flag.c_str());
      std::printf("wrote %s (version %s)\n", fit_output.c_str(), result.config.version().c_str());
      return 0;
    }
    if (*caption) {
      speechdesc::CaptionRunOptions options;
      options.input = cap_input;
      options.output = cap_output;
      options.grammar = PathOr(grammar_path, config ? config->grammar : std::nullopt);
      options.binning_config = PathOr(bins_path, std::optional<fs::path>());
      options.seed = seed ? *seed : (config ? config->seed : 0);
      const std::size_t n = speechdesc::RunCaption(options);
      std::printf("captioned %zu records -> %s\n", n, cap_output.c_str());
      return 0;
    }
    if (*evaluate) {
      eval.reference_manifest = eval_ref;
      eval.synthesized_dir = PathOr(synth_dir, std::optional<fs::path>());
      eval.binning_config = PathOr(bins_path, config ? config->binning_config : std::nullopt);
      eval.asr_hypotheses = PathOr(asr, std::optional<fs::path>());
      eval.label_pairs = PathOr(pairs, std::optional<fs::path>());
      eval.judgments = PathOr(judgments, std::optional<fs::path>());
      eval.ratings = PathOr(ratings, std::optional<fs::path>());
      eval.external_metrics = PathOr(external, std::optional<fs::path>());
      eval.workers = workers > 0 ? workers : (config ? config->workers : 1);
      if (config) eval.sample_rate_hz = config->sample_rate_hz;
      const auto report = speechdesc::RunEvaluate(eval);
      const std::string json = report.ToJson().dump(2) + "\n";
      if (!report_out.empty()) WriteFile(report_out, json);
      std::fputs(as_text ? report.ToText().c_str() : json.c_str(), stdout);
      for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
      return 0;
    }
    if (*stats) {
      const auto report = speechdesc::RunStats(stats_input);
      if (!stats_table.empty()) WriteFile(stats_table, report.ToTable());
      std::printf("%s\n", report.ToJson().dump(2).c_str());
      return 0;
    }
  } catch (const speechdesc::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
