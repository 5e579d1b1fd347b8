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

#ifndef SPEECHDESC_CAPTION_GRAMMAR_H_
#define SPEECHDESC_CAPTION_GRAMMAR_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "speechdesc/binning/binning.h"
#include "speechdesc/types.h"

namespace speechdesc {

// Phrasings of one label. Long forms go into descriptive captions, short
// forms into concise ones; aliases are recognized by the parser only.
struct PhraseSet {
  std::vector<std::string> long_forms;
  std::vector<std::string> short_forms;
  std::vector<std::string> aliases;

  bool operator==(const PhraseSet&) const = default;
};

// Phrase inventory and sentence skeletons. Skeleton placeholders:
//   {opening}       name, age, gender and accent, followed by a comma when named
//   {opening_bare}  the same without the trailing comma
//   {pitch} {pitch_variation} {reverb} {snr} {rate} {quality} {style} {Style}
//   {Pronoun} {pronoun} {s}   "She"/"she"/"s", "They"/"they"/""
//   {fragments}     robust skeletons only; the retained fragments
struct TemplateGrammar {
  std::string version;
  using LabelPhrases = std::map<std::string, PhraseSet, std::less<>>;
  // Binned attribute name -> label -> phrasings.
  std::map<std::string, LabelPhrases, std::less<>> labels;
  std::map<Gender, std::vector<std::string>> gender;
  std::map<AgeGroup, std::vector<std::string>> age;       // unspecified omitted
  std::map<Style, PhraseSet> style;
  std::vector<std::string> descriptive_skeletons;
  std::vector<std::string> concise_skeletons;
  std::vector<std::string> robust_skeletons;
  // Per binned attribute name, a fragment with one placeholder of that name.
  std::map<std::string, std::string, std::less<>> robust_fragments;

  static TemplateGrammar Default();
  static TemplateGrammar FromJson(const nlohmann::json& json);
  static TemplateGrammar Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // Throws ConfigError unless every label of the config has two long and two
  // short phrasings, all phrasings are lower case and no phrasing is shared
  // between two labels.
  void Validate(const BinningConfig& config) const;

  // Phrasings of a binned label, or null.
  const PhraseSet* Find(BinnedAttribute attribute, std::string_view label) const;

  bool operator==(const TemplateGrammar&) const = default;
};

inline constexpr const char* kEnvironmentPrefix = "Recording context:";
inline constexpr const char* kCompactEnvironmentPrefix = "Context:";

}  // namespace speechdesc

#endif  // SPEECHDESC_CAPTION_GRAMMAR_H_
