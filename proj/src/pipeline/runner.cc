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

#include "speechdesc/pipeline/runner.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iterator>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "speechdesc/caption/caption.h"
#include "speechdesc/caption/grammar.h"
#include "speechdesc/corpus/manifest.h"
#include "speechdesc/corpus/wav.h"
#include "speechdesc/evaluation/edit_distance.h"
#include "speechdesc/evaluation/if_bleu.h"
#include "speechdesc/evaluation/metrics.h"
#include "speechdesc/util/hash.h"

namespace speechdesc {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
// stops further scheduling and is rethrown once all threads have joined.
template <typename Fn>
void ParallelFor(std::size_t n, int workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  const std::size_t count =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), std::max<std::size_t>(n, 1));
  if (count <= 1) {
    body();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (std::size_t t = 0; t < count; ++t) threads.emplace_back(body);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void WriteAtomically(std::span<const AnnotatedRecord> records, const fs::path& path) {
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  WriteAnnotatedManifest(records, tmp);
  fs::rename(tmp, path);
}

struct PendingRecord {
  UtteranceRecord record;
  fs::path audio_path;
};

struct StageFailure {
  std::string stage;
  std::string error;
};

struct Stages {
  const PipelineConfig* config;
  const RunOptions* options;
  const BinningConfig* bins;
  const TemplateGrammar* grammar;
  CompletionBackend* completion;  // null: template generator
  std::string prompt_template;
  TranslationBackend* translation;  // null: no native caption
};

// One utterance through load, annotate, bin, caption and translate.
AnnotatedRecord Process(const PendingRecord& item, const Stages& s) {
  std::string stage = "load";
  try {
    AudioClip clip = LoadAudio(item.audio_path, s.config->sample_rate_hz);
    AnnotatedRecord out;
    out.record = item.record;
    out.record.duration_s = clip.duration_s();
    stage = "annotate";
    out.attributes = Annotate(out.record, clip, s.options->annotator);
    stage = "bin";
    out.labels = BinAttributes(out.attributes, out.record.speaker, out.record.style, *s.bins);
    stage = "caption";
    const std::uint64_t seed = DeriveSeed(s.config->seed, out.record.utterance_id);
    if (s.completion != nullptr) {
      out.captions = LlmGenerateCaptions(out.labels, *s.completion, s.prompt_template,
                                         *s.grammar, seed);
    } else {
      out.captions = GenerateCaptions(out.labels, *s.grammar, seed);
    }
    if (s.translation != nullptr) {
      stage = "translate";
      if (out.record.language == "eng") {
        out.captions.native = NativeCaption{out.captions.descriptive, "eng", false};
      } else {
        std::string error;
        auto native = TranslateCaption(out.captions.descriptive, out.record.language,
                                       *s.translation, &error);
        if (native) {
          out.captions.native = std::move(native);
        } else {
          out.captions.notes.push_back(error);
        }
      }
    }
    return out;
  } catch (const InjectedCrash&) {
    throw;
  } catch (const std::exception& e) {
    throw StageFailure{stage, e.what()};
  }
}

void Tally(std::map<std::string, std::size_t>& histogram, std::string_view label) {
  ++histogram[std::string(label)];
}

}  // namespace

json RunReport::ToJson() const {
  json j;
  j["fingerprint"] = fingerprint;
  j["binning_version"] = binning_version;
  j["grammar_version"] = grammar_version;
  j["total"] = total;
  j["annotated"] = annotated;
  j["failed"] = failed;
  j["resumed"] = resumed;
  j["journal_lines_dropped"] = journal_lines_dropped;
  json skipped = json::array();
  for (const auto& s : skipped_manifest_lines) {
    skipped.push_back({{"line", s.line_number}, {"reason", s.reason}});
  }
  j["skipped_manifest_lines"] = skipped;
  json fails = json::array();
  for (const auto& f : failures) fails.push_back(speechdesc::ToJson(f));
  j["failures"] = fails;
  j["notes"] = notes;
  j["elapsed_s"] = elapsed_s;
  return j;
}

RunReport RunAnnotate(const PipelineConfig& config, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  config.Validate();
  RunReport report;

  std::vector<PendingRecord> pending;
  std::set<std::string> ids;
  for (const fs::path& manifest : config.manifests) {
    auto contents = ReadManifest(manifest);
    for (auto& s : contents.skipped) {
      s.reason = manifest.string() + ": " + s.reason;
      report.skipped_manifest_lines.push_back(std::move(s));
    }
    const fs::path base = config.corpus_root.empty() ? manifest.parent_path() : config.corpus_root;
    for (auto& r : contents.records) {
      if (!ids.insert(r.utterance_id).second) {
        throw ConfigError("duplicate utterance_id '" + r.utterance_id + "' in " +
                          manifest.string());
      }
      fs::path audio(r.audio_ref);
      if (audio.is_relative()) audio = base / audio;
      pending.push_back({std::move(r), audio.lexically_normal()});
    }
  }
  std::sort(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
    return a.record.utterance_id < b.record.utterance_id;
  });
  report.total = pending.size();

  const BinningConfig bins =
      config.binning_config ? BinningConfig::Load(*config.binning_config) : BinningConfig::Default();
  bins.Validate();
  const TemplateGrammar grammar =
      config.grammar ? TemplateGrammar::Load(*config.grammar) : TemplateGrammar::Default();
  grammar.Validate(bins);
  report.binning_version = bins.version();
  report.grammar_version = grammar.version;
  report.fingerprint =
      config.Fingerprint(bins.version() + ":" + bins.ContentDigest(), grammar.version);

  Stages stages{&config, &options, &bins, &grammar, nullptr, {}, nullptr};
  std::unique_ptr<CompletionBackend> http_completion;
  if (config.caption_generator == CaptionGenerator::kLlmBackend) {
    if (options.completion != nullptr) {
      stages.completion = options.completion;
    } else if (config.llm_endpoint) {
      http_completion = std::make_unique<HttpCompletionBackend>(*config.llm_endpoint);
      stages.completion = http_completion.get();
    } else {
      throw ConfigError("caption_generator is llm but SPEECHDESC_LLM_URL is not set");
    }
    stages.prompt_template = config.prompt_template ? ReadText(*config.prompt_template)
                                                    : DefaultPromptTemplate();
  }
  std::unique_ptr<TranslationBackend> own_translation;
  if (config.translate) {
    if (options.translation != nullptr) {
      stages.translation = options.translation;
    } else {
      if (config.translation_endpoint) {
        own_translation = std::make_unique<HttpTranslationBackend>(*config.translation_endpoint);
      } else {
        own_translation = std::make_unique<PassthroughTranslator>();
        report.notes.push_back("no translation endpoint: native captions are untranslated");
      }
      stages.translation = own_translation.get();
    }
  }

  auto checkpoint = Checkpoint::Open(config.CheckpointPath(), report.fingerprint, options.resume);
  report.journal_lines_dropped = checkpoint->dropped_lines();

  std::vector<const PendingRecord*> todo;
  for (const auto& p : pending) {
    if (checkpoint->completed().contains(p.record.utterance_id)) {
      ++report.resumed;
    } else {
      todo.push_back(&p);
    }
  }

  std::mutex append_mu;
  std::size_t appended = 0;
  bool crashed = false;
  // Serializes journal appends and fires the crash hook.
  auto append = [&](auto&& write) {
    std::lock_guard<std::mutex> lock(append_mu);
    if (crashed) throw InjectedCrash("run interrupted");
    write();
    ++appended;
    if (options.crash_after && appended >= *options.crash_after) {
      if (options.crash_mode == CrashMode::kExit) std::_Exit(75);
      crashed = true;
      throw InjectedCrash("injected crash after " + std::to_string(appended) + " records");
    }
  };

  ParallelFor(todo.size(), config.workers, [&](std::size_t i) {
    const PendingRecord& item = *todo[i];
    try {
      AnnotatedRecord out = Process(item, stages);
      append([&] { checkpoint->RecordSuccess(out); });
    } catch (const StageFailure& f) {
      append([&] {
        checkpoint->RecordFailure({item.record.utterance_id, f.stage, f.error});
      });
    }
  });

  std::vector<AnnotatedRecord> finished;
  finished.reserve(pending.size());
  for (const auto& p : pending) {
    auto it = checkpoint->completed().find(p.record.utterance_id);
    if (it != checkpoint->completed().end()) finished.push_back(it->second);
  }
  for (const auto& p : pending) {
    auto it = checkpoint->failures().find(p.record.utterance_id);
    if (it != checkpoint->failures().end()) report.failures.push_back(it->second);
  }
  report.annotated = finished.size();
  report.failed = report.failures.size();

  WriteAtomically(finished, config.output);
  {
    std::ofstream out(config.FailureLogPath(), std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + config.FailureLogPath().string());
    for (const auto& f : report.failures) out << ToJsonLine(ToJson(f)) << '\n';
  }
  report.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  {
    std::ofstream out(config.ReportPath(), std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + config.ReportPath().string());
    out << report.ToJson().dump(2) << '\n';
  }
  return report;
}

json StatsReport::ToJson() const {
  json langs = json::object();
  for (const auto& [code, s] : languages) {
    langs[code] = {{"utterances", s.utterances},
                   {"hours", s.hours},
                   {"missing_duration", s.missing_duration}};
  }
  json hist = json::object();
  for (const auto& [attr, counts] : histograms) hist[attr] = counts;
  json j{{"languages", langs}, {"histograms", hist}};
  if (!skipped.empty()) {
    json s = json::array();
    for (const auto& k : skipped) s.push_back({{"line", k.line_number}, {"reason", k.reason}});
    j["skipped_lines"] = s;
  }
  return j;
}

std::string StatsReport::ToTable() const {
  std::ostringstream out;
  out << "section\tkey\tlabel\tvalue\n";
  for (const auto& [code, s] : languages) {
    char hours[32];
    std::snprintf(hours, sizeof hours, "%.4f", s.hours);
    out << "hours\t" << code << "\t\t" << hours << "\n";
    out << "utterances\t" << code << "\t\t" << s.utterances << "\n";
  }
  for (const auto& [attr, counts] : histograms) {
    for (const auto& [label, n] : counts) out << "label\t" << attr << "\t" << label << "\t" << n << "\n";
  }
  return out.str();
}

StatsReport ComputeStats(std::span<const AnnotatedRecord> records) {
  StatsReport report;
  for (const AnnotatedRecord& r : records) {
    LanguageStats& lang = report.languages[r.record.language];
    ++lang.utterances;
    if (r.record.duration_s) {
      lang.hours += *r.record.duration_s / 3600.0;
    } else {
      ++lang.missing_duration;
    }
    for (BinnedAttribute a : kAllBinnedAttributes) {
      if (!r.labels.label(a).empty()) Tally(report.histograms[std::string(ToString(a))], r.labels.label(a));
    }
    Tally(report.histograms[kGenderField], ToString(r.labels.gender));
    Tally(report.histograms[kAgeField], ToString(r.labels.age_group));
    Tally(report.histograms[kStyleField], ToString(r.labels.style));
  }
  return report;
}

StatsReport RunStats(const fs::path& annotated_manifest) {
  auto contents = ReadAnnotatedManifest(annotated_manifest);
  StatsReport report = ComputeStats(contents.records);
  report.skipped = std::move(contents.skipped);
  return report;
}

std::size_t RunCaption(const CaptionRunOptions& options) {
  auto contents = ReadAnnotatedManifest(options.input);
  std::optional<BinningConfig> bins;
  if (options.binning_config) {
    bins = BinningConfig::Load(*options.binning_config);
    bins->Validate();
  }
  const TemplateGrammar grammar =
      options.grammar ? TemplateGrammar::Load(*options.grammar) : TemplateGrammar::Default();
  if (bins) grammar.Validate(*bins);
  std::vector<AnnotatedRecord> records = std::move(contents.records);
  for (AnnotatedRecord& r : records) {
    if (bins) r.labels = BinAttributes(r.attributes, r.record.speaker, r.record.style, *bins);
    r.captions = GenerateCaptions(r.labels, grammar, DeriveSeed(options.seed, r.record.utterance_id));
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.record.utterance_id < b.record.utterance_id;
  });
  WriteAtomically(records, options.output);
  return records.size();
}

FitResult RunFitBins(const std::vector<fs::path>& annotated_manifests, const fs::path& output,
                     const FitOptions& options) {
  AttributeSamples samples;
  for (const auto& m : annotated_manifests) {
    for (const AnnotatedRecord& r : ReadAnnotatedManifest(m).records) {
      samples.Add(r.attributes, r.record.speaker.gender);
    }
  }
  FitResult result = FitBins(samples, options);
  result.config.Save(output);
  return result;
}

std::vector<std::string> DefaultConfusionClasses() {
  return {"anger", "disgust", "fear", "happy", "neutral", "sad", "surprise"};
}

EvaluationReport RunEvaluate(const EvaluateOptions& options) {
  EvaluationReport report;
  std::vector<AnnotatedRecord> refs;
  if (!options.reference_manifest.empty()) {
    refs = ReadAnnotatedManifest(options.reference_manifest).records;
  } else if (options.synthesized_dir || options.asr_hypotheses) {
    throw ConfigError("synthesized audio and ASR hypotheses need a reference manifest");
  }
  std::sort(refs.begin(), refs.end(), [](const auto& a, const auto& b) {
    return a.record.utterance_id < b.record.utterance_id;
  });
  const BinningConfig bins = options.binning_config ? BinningConfig::Load(*options.binning_config)
                                                    : BinningConfig::Default();
  bins.Validate();
  report.config_version = bins.version();

  if (options.synthesized_dir) {
    if (options.label_pairs) report.warnings.push_back("label pairs ignored: synthesized audio given");
    std::vector<std::optional<AttributeLabels>> candidates(refs.size());
    std::vector<std::string> problems(refs.size());
    ParallelFor(refs.size(), options.workers, [&](std::size_t i) {
      const AnnotatedRecord& ref = refs[i];
      const fs::path clip_path = *options.synthesized_dir / (ref.record.utterance_id + ".wav");
      if (!fs::exists(clip_path)) {
        problems[i] = "missing synthesized clip for " + ref.record.utterance_id;
        return;
      }
      try {
        SynthesizedItem item{LoadAudio(clip_path, options.sample_rate_hz), ref.record.transcript,
                             ref.record.language};
        IfBleuResult one = IfBleu(std::span(&ref.labels, 1), std::span(&item, 1), bins,
                                  options.annotator);
        candidates[i] = std::move(one.candidates.front());
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        problems[i] = "unusable synthesized clip for " + ref.record.utterance_id + ": " + e.what();
      }
    });
    std::vector<AttributeLabels> kept_refs, kept_cands;
    for (std::size_t i = 0; i < refs.size(); ++i) {
      if (candidates[i]) {
        kept_refs.push_back(refs[i].labels);
        kept_cands.push_back(std::move(*candidates[i]));
      } else {
        ++report.missing_clips;
        report.warnings.push_back(problems[i]);
      }
    }
    report.evaluated = kept_cands.size();
    if (!kept_cands.empty()) {
      report.if_bleu = IfBleuFromLabels(kept_refs, kept_cands);
      report.per_attribute_accuracy = AttributeAccuracy(kept_refs, kept_cands);
    }
  } else if (options.label_pairs) {
    std::vector<AttributeLabels> r, c;
    for (LabelPair& p : ReadLabelPairs(*options.label_pairs)) {
      r.push_back(std::move(p.reference));
      c.push_back(std::move(p.candidate));
    }
    report.evaluated = c.size();
    if (!c.empty()) {
      if (!r.front().config_version.empty()) report.config_version = r.front().config_version;
      report.if_bleu = IfBleuFromLabels(r, c);
      report.per_attribute_accuracy = AttributeAccuracy(r, c);
    }
  }

  if (options.asr_hypotheses) {
    std::map<std::string, const AnnotatedRecord*> by_id;
    for (const auto& r : refs) by_id[r.record.utterance_id] = &r;
    std::vector<std::string> references, hypotheses;
    ForEachLine(*options.asr_hypotheses, [&](std::size_t line, const std::string& text) {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception&) {
        report.warnings.push_back("asr hypotheses line " + std::to_string(line) + ": invalid JSON");
        return;
      }
      const std::string id = j.value("utterance_id", "");
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        report.warnings.push_back("asr hypothesis for unknown utterance '" + id + "'");
        return;
      }
      references.push_back(it->second->record.transcript);
      hypotheses.push_back(j.value("hypothesis", ""));
    });
    ErrorRates rates = CerWer(references, hypotheses);
    for (const auto& w : rates.warnings) report.warnings.push_back(w);
    report.error_rates = std::move(rates);
  }

  if (options.judgments) {
    const auto judgments = ReadJudgments(*options.judgments);
    report.confusion = BuildConfusionMatrix(
        judgments, options.confusion_classes.empty() ? DefaultConfusionClasses()
                                                     : options.confusion_classes);
  }
  if (options.ratings) report.mushra = MushraAggregate(ReadRatings(*options.ratings));
  if (options.external_metrics) {
    json j;
    try {
      j = json::parse(ReadText(*options.external_metrics));
    } catch (const json::exception& e) {
      throw ConfigError("external metrics: " + std::string(e.what()));
    }
    if (j.contains("mos") && j["mos"].is_number()) report.mos = j["mos"].get<double>();
    if (j.contains("s_sim") && j["s_sim"].is_number()) {
      report.speaker_similarity = j["s_sim"].get<double>();
    }
  }
  return report;
}

}  // namespace speechdesc
