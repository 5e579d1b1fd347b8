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
#include <unordered_map>

#include "speechdesc/caption/caption.h"

namespace speechdesc {
namespace {

enum class Slot { kBinned, kGender, kAge, kStyle };

struct Entry {
  std::string phrase;
  Slot slot;
  std::size_t binned_index = 0;
  std::string label;
  Gender gender = Gender::kUnspecified;
  AgeGroup age = AgeGroup::kUnspecified;
  Style style = Style::kUnspecified;
};

constexpr char kMask = '\x1f';

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '\'' || c >= 0x80;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string FirstWord(std::string_view s, std::size_t pos = 0) {
  std::size_t end = pos;
  while (end < s.size() && IsWordByte(static_cast<unsigned char>(s[end]))) ++end;
  return std::string(s.substr(pos, end - pos));
}

void Mask(std::string& text, std::size_t begin, std::size_t end) {
  std::fill(text.begin() + static_cast<std::ptrdiff_t>(begin),
            text.begin() + static_cast<std::ptrdiff_t>(end), kMask);
}

}  // namespace

struct CaptionParser::Index {
  std::vector<Entry> entries;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_word;

  void Add(Entry entry) {
    entry.phrase = Lower(entry.phrase);
    const std::string key = FirstWord(entry.phrase);
    by_first_word[key].push_back(entries.size());
    entries.push_back(std::move(entry));
  }

  // Whether text at pos begins with an age or gender phrasing.
  bool StartsWithSpeakerNoun(std::string_view text, std::size_t pos) const {
    auto it = by_first_word.find(FirstWord(text, pos));
    if (it == by_first_word.end()) return false;
    for (std::size_t i : it->second) {
      const Entry& e = entries[i];
      if ((e.slot == Slot::kGender || e.slot == Slot::kAge) &&
          text.substr(pos, e.phrase.size()) == e.phrase) {
        return true;
      }
    }
    return false;
  }
};

CaptionParser::CaptionParser(const TemplateGrammar& grammar)
    : index_(std::make_unique<Index>()) {
  for (BinnedAttribute a : kAllBinnedAttributes) {
    auto it = grammar.labels.find(ToString(a));
    if (it == grammar.labels.end()) continue;
    for (const auto& [label, phrases] : it->second) {
      for (const auto* list : {&phrases.long_forms, &phrases.short_forms, &phrases.aliases}) {
        for (const std::string& phrase : *list) {
          Entry e;
          e.phrase = phrase;
          e.slot = Slot::kBinned;
          e.binned_index = static_cast<std::size_t>(a);
          e.label = label;
          index_->Add(std::move(e));
        }
      }
    }
  }
  for (const auto& [gender, phrases] : grammar.gender) {
    for (const std::string& phrase : phrases) {
      Entry e;
      e.phrase = phrase;
      e.slot = Slot::kGender;
      e.gender = gender;
      index_->Add(std::move(e));
    }
  }
  for (const auto& [age, phrases] : grammar.age) {
    for (const std::string& phrase : phrases) {
      Entry e;
      e.phrase = phrase;
      e.slot = Slot::kAge;
      e.age = age;
      index_->Add(std::move(e));
    }
  }
  for (const auto& [style, phrases] : grammar.style) {
    for (const auto* list : {&phrases.long_forms, &phrases.short_forms, &phrases.aliases}) {
      for (const std::string& phrase : *list) {
        Entry e;
        e.phrase = phrase;
        e.slot = Slot::kStyle;
        e.style = style;
        index_->Add(std::move(e));
      }
    }
  }
}

CaptionParser::~CaptionParser() = default;
CaptionParser::CaptionParser(CaptionParser&&) noexcept = default;
CaptionParser& CaptionParser::operator=(CaptionParser&&) noexcept = default;

PartialLabels CaptionParser::Parse(std::string_view caption) const {
  PartialLabels out;
  std::string text(caption);
  std::string lower = Lower(caption);

  // Environment tags: "Recording context: [a] [b]."
  const std::string env_prefix = Lower(kCompactEnvironmentPrefix);
  const std::string env_long_prefix = Lower(kEnvironmentPrefix);
  if (std::size_t p = lower.find(env_prefix); p != std::string::npos) {
    std::size_t q = p + env_prefix.size();
    const std::size_t extra = env_long_prefix.size() - env_prefix.size();
    if (p >= extra && lower.compare(p - extra, env_long_prefix.size(), env_long_prefix) == 0) {
      p -= extra;
    }
    std::size_t end = q;
    while (true) {
      while (q < lower.size() && lower[q] == ' ') ++q;
      if (q >= lower.size() || lower[q] != '[') break;
      const std::size_t close = lower.find(']', q);
      if (close == std::string::npos) break;
      out.env_tags.push_back(text.substr(q + 1, close - q - 1));
      q = close + 1;
      end = q;
    }
    if (end < lower.size() && lower[end] == '.') ++end;
    if (out.env_tags.empty()) out.warnings.push_back("environment prefix without tags");
    Mask(lower, p, end);
  }

  // Accent: "with a(n) <accent> accent".
  for (std::size_t p = lower.find(" accent"); p != std::string::npos;
       p = lower.find(" accent", p + 1)) {
    const std::size_t after = p + 7;
    if (after < lower.size() && IsWordByte(static_cast<unsigned char>(lower[after]))) {
      continue;
    }
    const std::size_t w = lower.rfind("with a", p);
    if (w == std::string::npos) continue;
    std::size_t start = w + 6;
    if (start < lower.size() && lower[start] == 'n') ++start;
    if (start >= lower.size() || lower[start] != ' ') continue;
    ++start;
    if (start >= p) continue;
    out.accent = text.substr(start, p - start);
    Mask(lower, w, after);
    break;
  }

  // Speaker name: "<name>, a(n) <age or gender> ..." at the start.
  if (!lower.starts_with("a ") && !lower.starts_with("an ")) {
    for (const char* sep : {", a ", ", an "}) {
      const std::size_t p = lower.find(sep);
      if (p == std::string::npos || p == 0) continue;
      const std::size_t noun = p + std::char_traits<char>::length(sep);
      if (!index_->StartsWithSpeakerNoun(lower, noun)) continue;
      out.speaker_name = text.substr(0, p);
      Mask(lower, 0, p);
      break;
    }
  }

  struct Match {
    std::size_t start;
    std::size_t length;
    std::size_t entry;
  };
  std::vector<Match> candidates;
  for (std::size_t pos = 0; pos < lower.size(); ++pos) {
    const auto c = static_cast<unsigned char>(lower[pos]);
    if (!IsWordByte(c)) continue;
    if (pos > 0 && IsWordByte(static_cast<unsigned char>(lower[pos - 1]))) continue;
    auto it = index_->by_first_word.find(FirstWord(lower, pos));
    if (it == index_->by_first_word.end()) continue;
    for (std::size_t i : it->second) {
      const std::string& phrase = index_->entries[i].phrase;
      if (lower.compare(pos, phrase.size(), phrase) != 0) continue;
      const std::size_t end = pos + phrase.size();
      if (end < lower.size() && IsWordByte(static_cast<unsigned char>(lower[end]))) {
        continue;
      }
      candidates.push_back({pos, phrase.size(), i});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Match& a, const Match& b) {
                     if (a.length != b.length) return a.length > b.length;
                     return a.start < b.start;
                   });
  std::vector<bool> taken(lower.size(), false);
  std::vector<Match> chosen;
  for (const Match& m : candidates) {
    bool free = true;
    for (std::size_t k = m.start; k < m.start + m.length; ++k) {
      if (taken[k]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (std::size_t k = m.start; k < m.start + m.length; ++k) taken[k] = true;
    chosen.push_back(m);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Match& a, const Match& b) { return a.start < b.start; });

  auto conflict = [&out](const std::string& what) {
    out.warnings.push_back("conflicting phrasings for " + what);
  };
  for (const Match& m : chosen) {
    const Entry& e = index_->entries[m.entry];
    switch (e.slot) {
      case Slot::kBinned: {
        auto& slot = out.binned[e.binned_index];
        if (!slot) {
          slot = e.label;
        } else if (*slot != e.label) {
          conflict(std::string(ToString(kAllBinnedAttributes[e.binned_index])));
        }
        break;
      }
      case Slot::kGender:
        if (!out.gender) {
          out.gender = e.gender;
        } else if (*out.gender != e.gender) {
          conflict(kGenderField);
        }
        break;
      case Slot::kAge:
        if (!out.age_group) {
          out.age_group = e.age;
        } else if (*out.age_group != e.age) {
          conflict(kAgeField);
        }
        break;
      case Slot::kStyle:
        if (!out.style) {
          out.style = e.style;
        } else if (*out.style != e.style) {
          conflict(kStyleField);
        }
        break;
    }
  }
  if (chosen.empty() && !out.speaker_name && !out.accent && out.env_tags.empty()) {
    out.warnings.push_back("no attribute phrasing recognized");
  }
  return out;
}

PartialLabels ParseCaption(std::string_view caption, const TemplateGrammar& grammar) {
  return CaptionParser(grammar).Parse(caption);
}

std::vector<std::string> PartialLabels::PresentAttributes() const {
  std::vector<std::string> out;
  if (gender) out.push_back(kGenderField);
  if (speaker_name) out.push_back(kNameField);
  if (age_group) out.push_back(kAgeField);
  if (accent) out.push_back(kAccentField);
  for (BinnedAttribute a : kAllBinnedAttributes) {
    if (binned[static_cast<std::size_t>(a)]) out.emplace_back(ToString(a));
  }
  if (style) out.push_back(kStyleField);
  if (!env_tags.empty()) out.push_back(kEnvField);
  return out;
}

std::size_t PartialLabels::MentionableCount(const AttributeLabels& labels) {
  std::size_t n = kNumBinnedAttributes + 2;
  if (labels.speaker_name) ++n;
  if (labels.age_group != AgeGroup::kUnspecified) ++n;
  if (labels.accent) ++n;
  if (!labels.env_tags.empty()) ++n;
  return n;
}

std::size_t PartialLabels::MatchingCount(const AttributeLabels& labels) const {
  std::size_t n = 0;
  for (BinnedAttribute a : kAllBinnedAttributes) {
    const auto& got = binned[static_cast<std::size_t>(a)];
    if (got && *got == labels.label(a)) ++n;
  }
  if (gender == labels.gender) ++n;
  if (style == labels.style) ++n;
  if (labels.speaker_name && speaker_name == labels.speaker_name) ++n;
  if (labels.age_group != AgeGroup::kUnspecified && age_group == labels.age_group) ++n;
  if (labels.accent && accent == labels.accent) ++n;
  if (!labels.env_tags.empty() && env_tags == labels.env_tags) ++n;
  return n;
}

bool PartialLabels::Recovers(const AttributeLabels& labels) const {
  for (BinnedAttribute a : kAllBinnedAttributes) {
    const auto& got = binned[static_cast<std::size_t>(a)];
    if (!got || *got != labels.label(a)) return false;
  }
  return gender == labels.gender && style == labels.style &&
         age_group.value_or(AgeGroup::kUnspecified) == labels.age_group &&
         accent == labels.accent && env_tags == labels.env_tags &&
         speaker_name == labels.speaker_name;
}

}  // namespace speechdesc
