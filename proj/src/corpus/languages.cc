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

#include "speechdesc/corpus/languages.h"

#include <array>

namespace speechdesc {
namespace {

constexpr std::array<LanguageInfo, 24> kLanguages = {{
    {"asm", "Assamese", Script::kBengali},
    {"ben", "Bengali", Script::kBengali},
    {"brx", "Bodo", Script::kDevanagari},
    {"doi", "Dogri", Script::kDevanagari},
    {"eng", "English", Script::kLatin},
    {"guj", "Gujarati", Script::kGujarati},
    {"hin", "Hindi", Script::kDevanagari},
    {"hne", "Chhattisgarhi", Script::kDevanagari},
    {"kan", "Kannada", Script::kKannada},
    {"kas", "Kashmiri", Script::kPersoArabic},
    {"kok", "Konkani", Script::kDevanagari},
    {"mai", "Maithili", Script::kDevanagari},
    {"mal", "Malayalam", Script::kMalayalam},
    {"mar", "Marathi", Script::kDevanagari},
    {"mni", "Manipuri", Script::kBengali},
    {"nep", "Nepali", Script::kDevanagari},
    {"ory", "Odia", Script::kOdia},
    {"pan", "Punjabi", Script::kGurmukhi},
    {"san", "Sanskrit", Script::kDevanagari},
    {"sat", "Santali", Script::kOlChiki},
    {"snd", "Sindhi", Script::kPersoArabic},
    {"tam", "Tamil", Script::kTamil},
    {"tel", "Telugu", Script::kTelugu},
    {"urd", "Urdu", Script::kPersoArabic},
}};

}  // namespace

std::span<const LanguageInfo> SupportedLanguages() { return kLanguages; }

const LanguageInfo* FindLanguage(std::string_view code) {
  for (const LanguageInfo& info : kLanguages) {
    if (info.code == code) return &info;
  }
  return nullptr;
}

}  // namespace speechdesc
