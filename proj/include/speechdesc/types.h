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

#ifndef SPEECHDESC_TYPES_H_
#define SPEECHDESC_TYPES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace speechdesc {

enum class Gender { kMale, kFemale, kUnspecified };

enum class AgeGroup { kChild, kYoung, kMiddleAged, kElderly, kUnspecified };

enum class Style {
  kNeutral,
  kAnger,
  kDisgust,
  kFear,
  kHappy,
  kSad,
  kSurprise,
  kNews,
  kConversational,
  kDigitalCommand,
  kUnspecified,
};

inline constexpr std::array<Gender, 3> kAllGenders = {
    Gender::kMale, Gender::kFemale, Gender::kUnspecified};
inline constexpr std::array<AgeGroup, 5> kAllAgeGroups = {
    AgeGroup::kChild, AgeGroup::kYoung, AgeGroup::kMiddleAged,
    AgeGroup::kElderly, AgeGroup::kUnspecified};
inline constexpr std::array<Style, 11> kAllStyles = {
    Style::kNeutral,  Style::kAnger,          Style::kDisgust,
    Style::kFear,     Style::kHappy,          Style::kSad,
    Style::kSurprise, Style::kNews,           Style::kConversational,
    Style::kDigitalCommand, Style::kUnspecified};

std::string_view ToString(Gender gender);
std::string_view ToString(AgeGroup age);
std::string_view ToString(Style style);
std::optional<Gender> ParseGender(std::string_view text);
std::optional<AgeGroup> ParseAgeGroup(std::string_view text);
std::optional<Style> ParseStyle(std::string_view text);

struct SpeakerMetadata {
  std::string speaker_id;
  std::optional<std::string> display_name;
  Gender gender = Gender::kUnspecified;
  AgeGroup age_group = AgeGroup::kUnspecified;
  std::optional<std::string> accent;

  bool operator==(const SpeakerMetadata&) const = default;
};

struct StyleMetadata {
  Style style = Style::kUnspecified;
  std::vector<std::string> env_tags;

  bool operator==(const StyleMetadata&) const = default;
};

// One corpus row.
struct UtteranceRecord {
  std::string utterance_id;
  std::string audio_ref;
  std::string transcript;
  std::string language;  // ISO 639-3
  SpeakerMetadata speaker;
  StyleMetadata style;
  std::optional<double> duration_s;

  bool operator==(const UtteranceRecord&) const = default;
};

// Mono audio, amplitudes in [-1, 1].
struct AudioClip {
  int sample_rate_hz = 0;
  std::vector<float> samples;

  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
  bool empty() const { return samples.empty(); }
};

// Continuous measurements. Absent optionals mean "undefined", never zero;
// `flags` records why each undefined value is missing.
struct AcousticAttributes {
  std::optional<double> f0_mean_hz;
  std::optional<double> f0_std_hz;
  std::optional<double> snr_db;
  std::optional<double> c50_db;
  std::optional<double> speaking_rate_sps;
  std::optional<double> quality_score;
  double voiced_fraction = 0.0;
  double speech_duration_s = 0.0;
  std::vector<std::string> flags;

  bool operator==(const AcousticAttributes&) const = default;
};

// The six binned attributes, in canonical caption order.
enum class BinnedAttribute {
  kPitch,           // from f0_mean_hz, gender-conditioned
  kPitchVariation,  // from f0_std_hz
  kReverb,          // from c50_db
  kSnr,             // from snr_db
  kRate,            // from speaking_rate_sps
  kQuality,         // from quality_score
};
inline constexpr std::size_t kNumBinnedAttributes = 6;
inline constexpr std::array<BinnedAttribute, kNumBinnedAttributes>
    kAllBinnedAttributes = {
        BinnedAttribute::kPitch, BinnedAttribute::kPitchVariation,
        BinnedAttribute::kReverb, BinnedAttribute::kSnr,
        BinnedAttribute::kRate,  BinnedAttribute::kQuality};

// Label-field name used in manifests and captions ("pitch", "reverb", ...).
std::string_view ToString(BinnedAttribute attribute);
std::optional<BinnedAttribute> ParseBinnedAttribute(std::string_view text);
// Name of the measurement an attribute is binned from ("f0_mean", "c50", ...).
std::string_view MeasurementName(BinnedAttribute attribute);
std::optional<double> MeasurementOf(const AcousticAttributes& attrs,
                                    BinnedAttribute attribute);

// Categorical view of an utterance; the caption vocabulary.
struct AttributeLabels {
  std::array<std::string, kNumBinnedAttributes> binned;
  Gender gender = Gender::kUnspecified;
  AgeGroup age_group = AgeGroup::kUnspecified;
  std::optional<std::string> accent;
  Style style = Style::kUnspecified;
  std::vector<std::string> env_tags;
  std::optional<std::string> speaker_name;
  // Binned attributes whose measurement was undefined (neutral label used).
  std::vector<std::string> flagged;
  std::string config_version;

  const std::string& label(BinnedAttribute a) const {
    return binned[static_cast<std::size_t>(a)];
  }
  std::string& label(BinnedAttribute a) {
    return binned[static_cast<std::size_t>(a)];
  }

  bool operator==(const AttributeLabels&) const = default;
};

enum class CaptionGenerator { kTemplate, kLlmBackend };
std::string_view ToString(CaptionGenerator generator);
std::optional<CaptionGenerator> ParseCaptionGenerator(std::string_view text);

struct NativeCaption {
  std::string text;
  std::string language;
  bool untranslated = false;

  bool operator==(const NativeCaption&) const = default;
};

struct CaptionSet {
  std::string descriptive;
  std::string concise;
  std::string attribute_robust;
  std::optional<NativeCaption> native;
  CaptionGenerator generator = CaptionGenerator::kTemplate;
  std::uint64_t rng_seed = 0;
  std::vector<std::string> robust_retained;
  // Generation provenance: fallbacks, translation errors.
  std::vector<std::string> notes;

  bool operator==(const CaptionSet&) const = default;
};

struct AnnotatedRecord {
  UtteranceRecord record;
  AcousticAttributes attributes;
  AttributeLabels labels;
  CaptionSet captions;

  bool operator==(const AnnotatedRecord&) const = default;
};

}  // namespace speechdesc

#endif  // SPEECHDESC_TYPES_H_
