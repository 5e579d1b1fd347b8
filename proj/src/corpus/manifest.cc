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

#include "speechdesc/corpus/manifest.h"

#include <map>
#include <set>
#include <type_traits>
#include <utility>

#include "speechdesc/corpus/languages.h"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using nlohmann::json;

const json& Require(const json& object, const char* field) {
  auto it = object.find(field);
  if (it == object.end() || it->is_null()) {
    throw ValidationError(std::string("missing field '") + field + "'");
  }
  return *it;
}

std::string RequireString(const json& object, const char* field) {
  const json& value = Require(object, field);
  if (!value.is_string()) {
    throw ValidationError(std::string("field '") + field + "' is not a string");
  }
  return value.get<std::string>();
}

std::optional<std::string> OptionalString(const json& object,
                                          const char* field) {
  auto it = object.find(field);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ValidationError(std::string("field '") + field + "' is not a string");
  }
  return it->get<std::string>();
}

std::optional<double> OptionalNumber(const json& object, const char* field) {
  auto it = object.find(field);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw ValidationError(std::string("field '") + field + "' is not a number");
  }
  return it->get<double>();
}

std::vector<std::string> StringList(const json& object, const char* field) {
  auto it = object.find(field);
  if (it == object.end() || it->is_null()) return {};
  if (!it->is_array()) {
    throw ValidationError(std::string("field '") + field + "' is not a list");
  }
  std::vector<std::string> out;
  for (const json& item : *it) {
    if (!item.is_string()) {
      throw ValidationError(std::string("field '") + field +
                            "' has a non-string entry");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

template <typename Enum, typename Parser>
Enum EnumField(const json& object, const char* field, Enum fallback,
               Parser parse) {
  std::optional<std::string> text = OptionalString(object, field);
  if (!text) return fallback;
  std::optional<Enum> value = parse(*text);
  if (!value) {
    throw ValidationError(std::string("field '") + field +
                          "' has unknown value '" + *text + "'");
  }
  return *value;
}

json OptionalToJson(const std::optional<std::string>& value) {
  return value ? json(*value) : json(nullptr);
}

json OptionalToJson(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename Record, typename Decoder>
ManifestContents<Record> ReadLines(const std::filesystem::path& path,
                                   Decoder decode) {
  ManifestContents<Record> contents;
  std::map<std::string, int> seen;
  ForEachLine(path, [&](std::size_t number, const std::string& line) {
    try {
      json parsed = json::parse(line);
      if (!parsed.is_object()) throw ValidationError("line is not an object");
      Record record = decode(parsed);
      contents.records.push_back(std::move(record));
    } catch (const json::exception& e) {
      contents.skipped.push_back({number, std::string("malformed JSON: ") + e.what()});
    } catch (const ValidationError& e) {
      contents.skipped.push_back({number, e.what()});
    }
  });
  std::set<std::string> duplicates;
  for (const Record& record : contents.records) {
    const std::string& id = [&]() -> const std::string& {
      if constexpr (std::is_same_v<Record, AnnotatedRecord>) {
        return record.record.utterance_id;
      } else {
        return record.utterance_id;
      }
    }();
    if (++seen[id] == 2) duplicates.insert(id);
  }
  if (!duplicates.empty()) {
    std::string message = "duplicate utterance_id in " + path.string() + ":";
    for (const std::string& id : duplicates) message += " " + id;
    throw ValidationError(message);
  }
  return contents;
}

}  // namespace

json ToJson(const UtteranceRecord& record) {
  json speaker = {
      {"speaker_id", record.speaker.speaker_id},
      {"display_name", OptionalToJson(record.speaker.display_name)},
      {"gender", ToString(record.speaker.gender)},
      {"age_group", ToString(record.speaker.age_group)},
      {"accent", OptionalToJson(record.speaker.accent)},
  };
  json style = {
      {"style", ToString(record.style.style)},
      {"env_tags", record.style.env_tags},
  };
  return json{
      {"utterance_id", record.utterance_id},
      {"audio_ref", record.audio_ref},
      {"transcript", record.transcript},
      {"language", record.language},
      {"speaker", std::move(speaker)},
      {"style", std::move(style)},
      {"duration_s", OptionalToJson(record.duration_s)},
  };
}

UtteranceRecord UtteranceRecordFromJson(const json& object) {
  UtteranceRecord record;
  record.utterance_id = RequireString(object, "utterance_id");
  if (record.utterance_id.empty()) throw ValidationError("empty utterance_id");
  record.audio_ref = RequireString(object, "audio_ref");
  record.transcript = RequireString(object, "transcript");
  if (record.transcript.empty()) throw ValidationError("empty transcript");
  record.language = RequireString(object, "language");
  if (!IsSupportedLanguage(record.language)) {
    throw ValidationError("unsupported language '" + record.language + "'");
  }
  if (auto it = object.find("speaker"); it != object.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError("field 'speaker' is not an object");
    const json& s = *it;
    record.speaker.speaker_id = OptionalString(s, "speaker_id").value_or("");
    record.speaker.display_name = OptionalString(s, "display_name");
    record.speaker.gender =
        EnumField(s, "gender", Gender::kUnspecified, ParseGender);
    record.speaker.age_group =
        EnumField(s, "age_group", AgeGroup::kUnspecified, ParseAgeGroup);
    record.speaker.accent = OptionalString(s, "accent");
    if (record.speaker.display_name && record.speaker.speaker_id.empty()) {
      throw ValidationError("display_name given without speaker_id");
    }
  }
  if (auto it = object.find("style"); it != object.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError("field 'style' is not an object");
    record.style.style = EnumField(*it, "style", Style::kUnspecified, ParseStyle);
    record.style.env_tags = StringList(*it, "env_tags");
  }
  record.duration_s = OptionalNumber(object, "duration_s");
  return record;
}

json ToJson(const AcousticAttributes& a) {
  return json{
      {"f0_mean_hz", OptionalToJson(a.f0_mean_hz)},
      {"f0_std_hz", OptionalToJson(a.f0_std_hz)},
      {"snr_db", OptionalToJson(a.snr_db)},
      {"c50_db", OptionalToJson(a.c50_db)},
      {"speaking_rate_sps", OptionalToJson(a.speaking_rate_sps)},
      {"quality_score", OptionalToJson(a.quality_score)},
      {"voiced_fraction", a.voiced_fraction},
      {"speech_duration_s", a.speech_duration_s},
      {"flags", a.flags},
  };
}

AcousticAttributes AcousticAttributesFromJson(const json& object) {
  if (!object.is_object()) throw ValidationError("attributes is not an object");
  AcousticAttributes a;
  a.f0_mean_hz = OptionalNumber(object, "f0_mean_hz");
  a.f0_std_hz = OptionalNumber(object, "f0_std_hz");
  a.snr_db = OptionalNumber(object, "snr_db");
  a.c50_db = OptionalNumber(object, "c50_db");
  a.speaking_rate_sps = OptionalNumber(object, "speaking_rate_sps");
  a.quality_score = OptionalNumber(object, "quality_score");
  a.voiced_fraction = OptionalNumber(object, "voiced_fraction").value_or(0.0);
  a.speech_duration_s = OptionalNumber(object, "speech_duration_s").value_or(0.0);
  a.flags = StringList(object, "flags");
  return a;
}

json ToJson(const AttributeLabels& labels) {
  json out = json::object();
  for (BinnedAttribute attribute : kAllBinnedAttributes) {
    out[std::string(ToString(attribute))] = labels.label(attribute);
  }
  out["gender"] = ToString(labels.gender);
  out["age_group"] = ToString(labels.age_group);
  out["accent"] = OptionalToJson(labels.accent);
  out["style"] = ToString(labels.style);
  out["env_tags"] = labels.env_tags;
  out["speaker_name"] = OptionalToJson(labels.speaker_name);
  out["flagged"] = labels.flagged;
  out["config_version"] = labels.config_version;
  return out;
}

AttributeLabels AttributeLabelsFromJson(const json& object) {
  if (!object.is_object()) throw ValidationError("labels is not an object");
  AttributeLabels labels;
  for (BinnedAttribute attribute : kAllBinnedAttributes) {
    labels.label(attribute) =
        RequireString(object, std::string(ToString(attribute)).c_str());
  }
  labels.gender = EnumField(object, "gender", Gender::kUnspecified, ParseGender);
  labels.age_group =
      EnumField(object, "age_group", AgeGroup::kUnspecified, ParseAgeGroup);
  labels.accent = OptionalString(object, "accent");
  labels.style = EnumField(object, "style", Style::kUnspecified, ParseStyle);
  labels.env_tags = StringList(object, "env_tags");
  labels.speaker_name = OptionalString(object, "speaker_name");
  labels.flagged = StringList(object, "flagged");
  labels.config_version = OptionalString(object, "config_version").value_or("");
  return labels;
}

json ToJson(const CaptionSet& c) {
  json native = nullptr;
  if (c.native) {
    native = json{{"text", c.native->text},
                  {"language", c.native->language},
                  {"untranslated", c.native->untranslated}};
  }
  return json{
      {"descriptive", c.descriptive},
      {"concise", c.concise},
      {"attribute_robust", c.attribute_robust},
      {"native", std::move(native)},
      {"generator", ToString(c.generator)},
      {"rng_seed", c.rng_seed},
      {"robust_retained", c.robust_retained},
      {"notes", c.notes},
  };
}

CaptionSet CaptionSetFromJson(const json& object) {
  if (!object.is_object()) throw ValidationError("captions is not an object");
  CaptionSet c;
  c.descriptive = RequireString(object, "descriptive");
  c.concise = RequireString(object, "concise");
  c.attribute_robust = RequireString(object, "attribute_robust");
  if (auto it = object.find("native"); it != object.end() && !it->is_null()) {
    NativeCaption native;
    native.text = RequireString(*it, "text");
    native.language = RequireString(*it, "language");
    native.untranslated = it->value("untranslated", false);
    c.native = std::move(native);
  }
  c.generator = EnumField(object, "generator", CaptionGenerator::kTemplate,
                          ParseCaptionGenerator);
  const json& seed = Require(object, "rng_seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw ValidationError("field 'rng_seed' is not an integer");
  }
  c.rng_seed = seed.get<std::uint64_t>();
  c.robust_retained = StringList(object, "robust_retained");
  c.notes = StringList(object, "notes");
  return c;
}

json ToJson(const AnnotatedRecord& record) {
  json out = ToJson(record.record);
  out["attributes"] = ToJson(record.attributes);
  out["labels"] = ToJson(record.labels);
  out["captions"] = ToJson(record.captions);
  return out;
}

AnnotatedRecord AnnotatedRecordFromJson(const json& object) {
  AnnotatedRecord out;
  out.record = UtteranceRecordFromJson(object);
  out.attributes = AcousticAttributesFromJson(Require(object, "attributes"));
  out.labels = AttributeLabelsFromJson(Require(object, "labels"));
  out.captions = CaptionSetFromJson(Require(object, "captions"));
  return out;
}

std::string ToJsonLine(const json& value) {
  return value.dump(-1, ' ', false, json::error_handler_t::replace);
}

ManifestContents<UtteranceRecord> ReadManifest(const std::filesystem::path& path) {
  return ReadLines<UtteranceRecord>(path, UtteranceRecordFromJson);
}

ManifestContents<AnnotatedRecord> ReadAnnotatedManifest(
    const std::filesystem::path& path) {
  return ReadLines<AnnotatedRecord>(path, AnnotatedRecordFromJson);
}

void WriteAnnotatedManifest(std::span<const AnnotatedRecord> records,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const AnnotatedRecord& record : records) {
    out << ToJsonLine(ToJson(record)) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

LineWriter::LineWriter(const std::filesystem::path& path, bool append)
    : path_(path),
      out_(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc)) {
  if (!out_) throw IoError("cannot write " + path.string());
}

void LineWriter::Append(const std::string& line) {
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw IoError("write failure on " + path_.string());
}

}  // namespace speechdesc
