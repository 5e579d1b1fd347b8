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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "speechdesc/attributes/annotate.h"
#include "speechdesc/attributes/syllables.h"
#include "speechdesc/binning/binning.h"
#include "speechdesc/caption/caption.h"
#include "speechdesc/corpus/manifest.h"
#include "speechdesc/corpus/wav.h"
#include "speechdesc/errors.h"
#include "speechdesc/evaluation/bleu.h"
#include "speechdesc/evaluation/edit_distance.h"
#include "speechdesc/evaluation/metrics.h"
#include "speechdesc/pipeline/runner.h"

namespace py = pybind11;
namespace sd = speechdesc;

namespace {

// Structured values cross the boundary as JSON text; the Python package
// decodes them.
std::string Annotate(const std::vector<float>& samples, int sample_rate_hz,
                     const std::string& transcript, const std::string& language) {
  sd::AudioClip clip{sample_rate_hz, samples};
  if (sample_rate_hz != sd::kInternalSampleRate) {
    clip.samples = sd::Resample(samples, sample_rate_hz, sd::kInternalSampleRate);
    clip.sample_rate_hz = sd::kInternalSampleRate;
  }
  sd::UtteranceRecord record;
  record.transcript = transcript;
  record.language = language;
  py::gil_scoped_release release;
  return sd::ToJson(sd::Annotate(record, clip)).dump();
}

std::string BinAttributes(const std::string& attributes_json, const std::string& gender,
                          const std::string& style, const std::string& binning_path) {
  const auto attrs = sd::AcousticAttributesFromJson(nlohmann::json::parse(attributes_json));
  sd::SpeakerMetadata speaker;
  if (auto g = sd::ParseGender(gender)) speaker.gender = *g;
  else throw sd::ValidationError("unknown gender '" + gender + "'");
  sd::StyleMetadata st;
  if (auto s = sd::ParseStyle(style)) st.style = *s;
  else throw sd::ValidationError("unknown style '" + style + "'");
  const auto config = binning_path.empty() ? sd::BinningConfig::Default()
                                           : sd::BinningConfig::Load(binning_path);
  return sd::ToJson(sd::BinAttributes(attrs, speaker, st, config)).dump();
}

std::string GenerateCaptions(const std::string& labels_json, std::uint64_t seed) {
  const auto labels = sd::AttributeLabelsFromJson(nlohmann::json::parse(labels_json));
  return sd::ToJson(sd::GenerateCaptions(labels, sd::TemplateGrammar::Default(), seed)).dump();
}

py::dict ParseCaption(const std::string& caption) {
  static const sd::CaptionParser parser(sd::TemplateGrammar::Default());
  const sd::PartialLabels parsed = parser.Parse(caption);
  py::dict out;
  for (sd::BinnedAttribute a : sd::kAllBinnedAttributes) {
    const auto& v = parsed.binned[static_cast<std::size_t>(a)];
    if (v) out[py::str(std::string(sd::ToString(a)))] = *v;
  }
  if (parsed.gender) out[sd::kGenderField] = std::string(sd::ToString(*parsed.gender));
  if (parsed.age_group) out[sd::kAgeField] = std::string(sd::ToString(*parsed.age_group));
  if (parsed.style) out[sd::kStyleField] = std::string(sd::ToString(*parsed.style));
  if (parsed.accent) out[sd::kAccentField] = *parsed.accent;
  if (parsed.speaker_name) out[sd::kNameField] = *parsed.speaker_name;
  if (!parsed.env_tags.empty()) out[sd::kEnvField] = parsed.env_tags;
  return out;
}

py::dict CerWer(const std::vector<std::string>& refs, const std::vector<std::string>& hyps) {
  const sd::ErrorRates r = sd::CerWer(refs, hyps);
  py::dict out;
  out["cer_pct"] = r.cer_pct;
  out["wer_pct"] = r.wer_pct;
  out["pairs"] = r.pairs;
  out["excluded"] = r.excluded;
  out["warnings"] = r.warnings;
  return out;
}

std::vector<py::dict> Mushra(const std::vector<std::tuple<std::string, std::string, std::string, double>>& rows,
                             double confidence) {
  std::vector<sd::Rating> ratings;
  for (const auto& [system, utt, rater, score] : rows) ratings.push_back({system, utt, rater, score});
  std::vector<py::dict> out;
  for (const auto& s : sd::MushraAggregate(ratings, confidence)) {
    py::dict d;
    d["system"] = s.system;
    d["mean"] = s.mean;
    d["half_width"] = s.half_width ? py::cast(*s.half_width) : py::none();
    d["n"] = s.n;
    out.push_back(d);
  }
  return out;
}

std::string RunAnnotate(const std::string& config_path, int workers, bool resume) {
  auto config = sd::PipelineConfig::Load(config_path);
  if (workers > 0) config.workers = workers;
  sd::RunOptions options;
  options.resume = resume;
  py::gil_scoped_release release;
  return sd::RunAnnotate(config, options).ToJson().dump();
}

std::string RunStats(const std::string& manifest) {
  return sd::RunStats(manifest).ToJson().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "speechdesc native core";

  // Translators run newest first, so the base class goes first.
  py::register_exception<sd::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<sd::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<sd::ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("annotate", &Annotate, py::arg("samples"), py::arg("sample_rate_hz"),
        py::arg("transcript") = "", py::arg("language") = "eng");
  m.def("c50_from_rir", [](const std::vector<float>& rir, int rate) {
    return sd::C50FromRir(rir, rate);
  }, py::arg("rir"), py::arg("sample_rate_hz"));
  m.def("count_syllables", [](const std::string& text, const std::string& language) {
    return sd::CountSyllables(text, language);
  }, py::arg("transcript"), py::arg("language"));
  m.def("bin_attributes", &BinAttributes, py::arg("attributes_json"),
        py::arg("gender") = "unspecified", py::arg("style") = "unspecified",
        py::arg("binning_config") = "");
  m.def("generate_captions", &GenerateCaptions, py::arg("labels_json"), py::arg("seed") = 0);
  m.def("parse_caption", &ParseCaption, py::arg("caption"));
  m.def("corpus_bleu", &sd::CorpusBleu, py::arg("candidates"), py::arg("references"));
  m.def("cer_wer", &CerWer, py::arg("references"), py::arg("hypotheses"));
  m.def("mushra_aggregate", &Mushra, py::arg("ratings"), py::arg("confidence") = 0.95);
  m.def("run_annotate", &RunAnnotate, py::arg("config"), py::arg("workers") = 0,
        py::arg("resume") = false);
  m.def("run_stats", &RunStats, py::arg("manifest"));
}
