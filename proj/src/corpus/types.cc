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

#include "speechdesc/types.h"

#include <cstddef>

namespace speechdesc {
namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(std::string_view text,
                           const std::array<Enum, N>& values) {
  for (Enum value : values) {
    if (ToString(value) == text) return value;
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(Gender gender) {
  switch (gender) {
    case Gender::kMale: return "male";
    case Gender::kFemale: return "female";
    case Gender::kUnspecified: return "unspecified";
  }
  return "unspecified";
}

std::string_view ToString(AgeGroup age) {
  switch (age) {
    case AgeGroup::kChild: return "child";
    case AgeGroup::kYoung: return "young";
    case AgeGroup::kMiddleAged: return "middle_aged";
    case AgeGroup::kElderly: return "elderly";
    case AgeGroup::kUnspecified: return "unspecified";
  }
  return "unspecified";
}

std::string_view ToString(Style style) {
  switch (style) {
    case Style::kNeutral: return "neutral";
    case Style::kAnger: return "anger";
    case Style::kDisgust: return "disgust";
    case Style::kFear: return "fear";
    case Style::kHappy: return "happy";
    case Style::kSad: return "sad";
    case Style::kSurprise: return "surprise";
    case Style::kNews: return "news";
    case Style::kConversational: return "conversational";
    case Style::kDigitalCommand: return "digital_command";
    case Style::kUnspecified: return "unspecified";
  }
  return "unspecified";
}

std::optional<Gender> ParseGender(std::string_view text) {
  return Lookup(text, kAllGenders);
}

std::optional<AgeGroup> ParseAgeGroup(std::string_view text) {
  return Lookup(text, kAllAgeGroups);
}

std::optional<Style> ParseStyle(std::string_view text) {
  return Lookup(text, kAllStyles);
}

std::string_view ToString(BinnedAttribute attribute) {
  switch (attribute) {
    case BinnedAttribute::kPitch: return "pitch";
    case BinnedAttribute::kPitchVariation: return "pitch_variation";
    case BinnedAttribute::kReverb: return "reverb";
    case BinnedAttribute::kSnr: return "snr";
    case BinnedAttribute::kRate: return "rate";
    case BinnedAttribute::kQuality: return "quality";
  }
  return "";
}

std::optional<BinnedAttribute> ParseBinnedAttribute(std::string_view text) {
  return Lookup(text, kAllBinnedAttributes);
}

std::string_view MeasurementName(BinnedAttribute attribute) {
  switch (attribute) {
    case BinnedAttribute::kPitch: return "f0_mean";
    case BinnedAttribute::kPitchVariation: return "f0_std";
    case BinnedAttribute::kReverb: return "c50";
    case BinnedAttribute::kSnr: return "snr";
    case BinnedAttribute::kRate: return "speaking_rate";
    case BinnedAttribute::kQuality: return "quality";
  }
  return "";
}

std::optional<double> MeasurementOf(const AcousticAttributes& attrs,
                                    BinnedAttribute attribute) {
  switch (attribute) {
    case BinnedAttribute::kPitch: return attrs.f0_mean_hz;
    case BinnedAttribute::kPitchVariation: return attrs.f0_std_hz;
    case BinnedAttribute::kReverb: return attrs.c50_db;
    case BinnedAttribute::kSnr: return attrs.snr_db;
    case BinnedAttribute::kRate: return attrs.speaking_rate_sps;
    case BinnedAttribute::kQuality: return attrs.quality_score;
  }
  return std::nullopt;
}

std::string_view ToString(CaptionGenerator generator) {
  return generator == CaptionGenerator::kTemplate ? "template" : "llm_backend";
}

std::optional<CaptionGenerator> ParseCaptionGenerator(std::string_view text) {
  if (text == "template") return CaptionGenerator::kTemplate;
  if (text == "llm_backend") return CaptionGenerator::kLlmBackend;
  return std::nullopt;
}

}  // namespace speechdesc
