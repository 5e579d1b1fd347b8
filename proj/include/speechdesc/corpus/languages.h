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

#ifndef SPEECHDESC_CORPUS_LANGUAGES_H_
#define SPEECHDESC_CORPUS_LANGUAGES_H_

#include <span>
#include <string_view>

namespace speechdesc {

// Primary writing system of a language as it appears in transcripts.
enum class Script {
  kLatin,
  kDevanagari,
  kBengali,
  kGurmukhi,
  kGujarati,
  kOdia,
  kTamil,
  kTelugu,
  kKannada,
  kMalayalam,
  kPersoArabic,
  kOlChiki,
  kMeeteiMayek,
};

struct LanguageInfo {
  std::string_view code;  // ISO 639-3
  std::string_view name;
  Script script;
};

// The 23 Indian languages plus English.
std::span<const LanguageInfo> SupportedLanguages();
const LanguageInfo* FindLanguage(std::string_view code);
inline bool IsSupportedLanguage(std::string_view code) {
  return FindLanguage(code) != nullptr;
}

}  // namespace speechdesc

#endif  // SPEECHDESC_CORPUS_LANGUAGES_H_
