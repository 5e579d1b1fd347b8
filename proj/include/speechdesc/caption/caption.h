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

#ifndef SPEECHDESC_CAPTION_CAPTION_H_
#define SPEECHDESC_CAPTION_CAPTION_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speechdesc/caption/grammar.h"
#include "speechdesc/types.h"

namespace speechdesc {

// Attribute names used in CaptionSet::robust_retained and
// PartialLabels::PresentAttributes, beside the binned attribute names.
inline constexpr const char* kGenderField = "gender";
inline constexpr const char* kStyleField = "style";
inline constexpr const char* kNameField = "speaker_name";
inline constexpr const char* kAgeField = "age_group";
inline constexpr const char* kAccentField = "accent";
inline constexpr const char* kEnvField = "env_tags";

// Template captions. Deterministic in (labels, grammar, seed). Throws
// GenerationError when a label has no phrasing or a free-text field cannot be
// rendered unambiguously.
CaptionSet GenerateCaptions(const AttributeLabels& labels,
                            const TemplateGrammar& grammar,
                            std::uint64_t seed);

// Labels recovered from a caption. Attributes the caption does not mention
// stay empty.
struct PartialLabels {
  std::array<std::optional<std::string>, kNumBinnedAttributes> binned;
  std::optional<Gender> gender;
  std::optional<AgeGroup> age_group;
  std::optional<std::string> accent;
  std::optional<Style> style;
  std::vector<std::string> env_tags;
  std::optional<std::string> speaker_name;
  std::vector<std::string> warnings;

  std::vector<std::string> PresentAttributes() const;
  // Fields of labels that a caption would mention, and how many of them
  // this parse reproduces.
  static std::size_t MentionableCount(const AttributeLabels& labels);
  std::size_t MatchingCount(const AttributeLabels& labels) const;
  // Every mentionable field matches and nothing else was recovered.
  bool Recovers(const AttributeLabels& labels) const;
};

// Reusable parser; building the phrase index once keeps parsing cheap.
class CaptionParser {
 public:
  explicit CaptionParser(const TemplateGrammar& grammar);
  ~CaptionParser();
  CaptionParser(CaptionParser&&) noexcept;
  CaptionParser& operator=(CaptionParser&&) noexcept;

  PartialLabels Parse(std::string_view caption) const;

 private:
  struct Index;
  std::unique_ptr<Index> index_;
};

PartialLabels ParseCaption(std::string_view caption,
                           const TemplateGrammar& grammar);

}  // namespace speechdesc

#endif  // SPEECHDESC_CAPTION_CAPTION_H_
