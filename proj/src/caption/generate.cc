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

#include <algorithm>
#include <cctype>
#include <random>

#include "speechdesc/caption/caption.h"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

enum class Form { kLong, kShort, kShortest, kLongest };

class Chooser {
 public:
  explicit Chooser(std::uint64_t seed) : rng_(seed) {}
  template <typename T>
  const T& Pick(const std::vector<T>& options) {
    return options[static_cast<std::size_t>(rng_() % options.size())];
  }
  bool Coin() { return (rng_() >> 63) != 0; }

 private:
  std::mt19937_64 rng_;
};

bool StartsWithVowel(std::string_view s) {
  if (s.empty()) return false;
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string Capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void ReplaceAll(std::string& text, std::string_view key, std::string_view value) {
  for (std::size_t pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
}

void CheckFreeText(const AttributeLabels& labels) {
  if (labels.speaker_name) {
    const std::string& name = *labels.speaker_name;
    const std::string lower = Lower(name);
    if (name.empty() || name.find(',') != std::string::npos ||
        lower.starts_with("a ") || lower.starts_with("an ")) {
      throw GenerationError("speaker name '" + name + "' cannot be rendered");
    }
  }
  if (labels.accent) {
    const std::string lower = Lower(*labels.accent);
    if (lower.empty() || lower.find("accent") != std::string::npos ||
        lower.find("with a") != std::string::npos) {
      throw GenerationError("accent '" + *labels.accent + "' cannot be rendered");
    }
  }
  for (const std::string& tag : labels.env_tags) {
    if (tag.empty() || tag.find_first_of("[]") != std::string::npos) {
      throw GenerationError("environment tag '" + tag + "' cannot be rendered");
    }
  }
}

// Which optional fields a caption mentions.
struct Coverage {
  std::array<bool, kNumBinnedAttributes> binned{};
  bool age = false;
  bool accent = false;
  bool env = false;
};

bool ShorterThan(const std::string& x, const std::string& y) {
  return x.size() < y.size();
}

const std::string& Shortest(const std::vector<std::string>& options) {
  return *std::min_element(options.begin(), options.end(), ShorterThan);
}

class Renderer {
 public:
  Renderer(const AttributeLabels& labels, const TemplateGrammar& grammar,
           Chooser& chooser)
      : labels_(labels), grammar_(grammar), chooser_(chooser) {
    if (labels_.age_group != AgeGroup::kUnspecified) {
      auto it = grammar_.age.find(labels_.age_group);
      if (it == grammar_.age.end() || it->second.empty()) {
        throw GenerationError("grammar has no phrasing for age group " +
                              std::string(ToString(labels_.age_group)));
      }
      age_phrase_ = chooser_.Pick(it->second);
    }
    auto git = grammar_.gender.find(labels_.gender);
    if (git == grammar_.gender.end() || git->second.empty()) {
      throw GenerationError("grammar has no phrasing for gender " +
                            std::string(ToString(labels_.gender)));
    }
    gender_phrase_ = chooser_.Pick(git->second);
  }

  std::string Render(const std::string& skeleton, Form form,
                     const Coverage& coverage) {
    std::string text = skeleton;
    const OpeningParts opening = Opening(coverage, form == Form::kShortest);
    ReplaceAll(text, "{opening_bare}", opening.bare);
    ReplaceAll(text, "{opening}", opening.full);
    if (text.find("{fragments}") != std::string::npos) {
      ReplaceAll(text, "{fragments}", Fragments(coverage, form));
    }
    for (BinnedAttribute a : kAllBinnedAttributes) {
      const std::string key = "{" + std::string(ToString(a)) + "}";
      if (text.find(key) != std::string::npos) {
        ReplaceAll(text, key, BinnedPhrase(a, form));
      }
    }
    const PhraseSet& style = StyleSet();
    if (text.find("{Style}") != std::string::npos) {
      ReplaceAll(text, "{Style}", Capitalize(PickForm(style, form, "style")));
    }
    if (text.find("{style}") != std::string::npos) {
      ReplaceAll(text, "{style}", PickForm(style, form, "style"));
    }
    std::string pronoun = "they", s;
    if (labels_.gender == Gender::kFemale) pronoun = "she", s = "s";
    if (labels_.gender == Gender::kMale) pronoun = "he", s = "s";
    ReplaceAll(text, "{Pronoun}", Capitalize(pronoun));
    ReplaceAll(text, "{pronoun}", pronoun);
    ReplaceAll(text, "{s}", s);
    if (coverage.env && !labels_.env_tags.empty()) {
      text += " ";
      text += form == Form::kLong || form == Form::kLongest
                  ? kEnvironmentPrefix
                  : kCompactEnvironmentPrefix;
      for (const std::string& tag : labels_.env_tags) text += " [" + tag + "]";
      text += ".";
    }
    return text;
  }

 private:
  struct OpeningParts {
    std::string full;
    std::string bare;
  };

  OpeningParts Opening(const Coverage& coverage, bool shortest) {
    std::string noun;
    if (coverage.age && !age_phrase_.empty()) {
      noun = (shortest ? Shortest(grammar_.age.at(labels_.age_group)) : age_phrase_) + " ";
    }
    noun += shortest ? Shortest(grammar_.gender.at(labels_.gender)) : gender_phrase_;
    std::string article = StartsWithVowel(noun) ? "an " : "a ";
    std::string accent;
    if (coverage.accent && labels_.accent) {
      accent = std::string(StartsWithVowel(*labels_.accent) ? " with an " : " with a ") +
               *labels_.accent + " accent";
    }
    OpeningParts parts;
    if (labels_.speaker_name) {
      parts.bare = *labels_.speaker_name + ", " + article + noun + accent;
      parts.full = parts.bare + ",";
    } else {
      parts.bare = Capitalize(article) + noun + accent;
      parts.full = parts.bare;
    }
    return parts;
  }

  std::string Fragments(const Coverage& coverage, Form form) {
    std::string out;
    for (BinnedAttribute a : kAllBinnedAttributes) {
      if (!coverage.binned[static_cast<std::size_t>(a)]) continue;
      auto it = grammar_.robust_fragments.find(ToString(a));
      if (it == grammar_.robust_fragments.end()) {
        throw GenerationError("grammar has no robust fragment for " +
                              std::string(ToString(a)));
      }
      std::string fragment = it->second;
      ReplaceAll(fragment, "{" + std::string(ToString(a)) + "}",
                 BinnedPhrase(a, form));
      if (!out.empty()) out += ", ";
      out += fragment;
    }
    return out;
  }

  std::string BinnedPhrase(BinnedAttribute a, Form form) {
    const std::string& label = labels_.label(a);
    const PhraseSet* phrases = grammar_.Find(a, label);
    if (phrases == nullptr) {
      throw GenerationError("grammar has no phrasing for label '" + label + "'");
    }
    return PickForm(*phrases, form, "label '" + label + "'");
  }

  const PhraseSet& StyleSet() {
    auto it = grammar_.style.find(labels_.style);
    if (it == grammar_.style.end()) {
      throw GenerationError("grammar has no phrasing for style " +
                            std::string(ToString(labels_.style)));
    }
    return it->second;
  }

  std::string PickForm(const PhraseSet& set, Form form, const std::string& who) {
    const bool long_forms = form == Form::kLong || form == Form::kLongest;
    const auto& options = long_forms ? set.long_forms : set.short_forms;
    if (options.empty()) throw GenerationError("grammar has no phrasing for " + who);
    if (form == Form::kShortest) return Shortest(options);
    if (form == Form::kLongest) {
      return *std::max_element(options.begin(), options.end(), ShorterThan);
    }
    return chooser_.Pick(options);
  }

  const AttributeLabels& labels_;
  const TemplateGrammar& grammar_;
  Chooser& chooser_;
  std::string age_phrase_;
  std::string gender_phrase_;
};

}  // namespace

CaptionSet GenerateCaptions(const AttributeLabels& labels,
                            const TemplateGrammar& grammar, std::uint64_t seed) {
  CheckFreeText(labels);
  if (grammar.descriptive_skeletons.empty() || grammar.concise_skeletons.empty() ||
      grammar.robust_skeletons.empty()) {
    throw GenerationError("grammar has no skeletons");
  }
  Chooser chooser(seed);
  Renderer renderer(labels, grammar, chooser);

  Coverage full;
  full.binned.fill(true);
  full.age = full.accent = full.env = true;

  CaptionSet captions;
  captions.generator = CaptionGenerator::kTemplate;
  captions.rng_seed = seed;
  captions.descriptive =
      renderer.Render(chooser.Pick(grammar.descriptive_skeletons), Form::kLong, full);
  captions.concise =
      renderer.Render(chooser.Pick(grammar.concise_skeletons), Form::kShort, full);
  // Concise captions stay within 60% of the descriptive length: first the
  // most compact concise rendering, then the most verbose descriptive one.
  auto too_long = [&captions] {
    return captions.concise.size() * 5 > captions.descriptive.size() * 3;
  };
  if (too_long()) {
    for (const std::string& skeleton : grammar.concise_skeletons) {
      std::string compact = renderer.Render(skeleton, Form::kShortest, full);
      if (compact.size() < captions.concise.size()) captions.concise = std::move(compact);
    }
  }
  if (too_long()) {
    for (const std::string& skeleton : grammar.descriptive_skeletons) {
      std::string verbose = renderer.Render(skeleton, Form::kLongest, full);
      if (verbose.size() > captions.descriptive.size()) {
        captions.descriptive = std::move(verbose);
      }
    }
  }

  Coverage robust;
  const bool has_age = labels.age_group != AgeGroup::kUnspecified;
  const bool has_accent = labels.accent.has_value();
  const bool has_env = !labels.env_tags.empty();
  for (;;) {
    int kept = 0;
    for (bool& b : robust.binned) {
      b = chooser.Coin();
      kept += b ? 1 : 0;
    }
    robust.age = has_age && chooser.Coin();
    robust.accent = has_accent && chooser.Coin();
    robust.env = has_env && chooser.Coin();
    if (kept >= 2 && kept < static_cast<int>(kNumBinnedAttributes)) break;
  }
  captions.attribute_robust =
      renderer.Render(chooser.Pick(grammar.robust_skeletons), Form::kLong, robust);

  captions.robust_retained.push_back(kGenderField);
  if (labels.speaker_name) captions.robust_retained.push_back(kNameField);
  if (robust.age) captions.robust_retained.push_back(kAgeField);
  if (robust.accent) captions.robust_retained.push_back(kAccentField);
  for (BinnedAttribute a : kAllBinnedAttributes) {
    if (robust.binned[static_cast<std::size_t>(a)]) {
      captions.robust_retained.emplace_back(ToString(a));
    }
  }
  captions.robust_retained.push_back(kStyleField);
  if (robust.env) captions.robust_retained.push_back(kEnvField);
  return captions;
}

}  // namespace speechdesc
