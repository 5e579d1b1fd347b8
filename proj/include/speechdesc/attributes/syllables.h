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

#ifndef SPEECHDESC_ATTRIBUTES_SYLLABLES_H_
#define SPEECHDESC_ATTRIBUTES_SYLLABLES_H_

#include <optional>
#include <string_view>

namespace speechdesc {

// Number of vowel nuclei in a UTF-8 transcript, after NFC normalization.
//
// Brahmic scripts (Devanagari through Malayalam): every independent vowel is
// a nucleus; a consonant carries one nucleus (inherent vowel or its
// dependent sign) unless it is followed by a virama. Chillu letters, khanda
// ta and similar dead consonants carry none. Schwa deletion is not modelled.
// Meetei Mayek follows the same rules.
//
// Latin and Ol Chiki: each maximal run of vowel letters is one nucleus
// (Latin vowels are a, e, i, o, u, y and their Latin-1 accented forms).
//
// Perso-Arabic: a consonant not followed by sukun and not word-final is a
// nucleus; a following long-vowel letter merges into it. Vowel letters that
// do not follow a consonant count on their own.
//
// Throws ValidationError when `language` is not in the language registry.
int CountSyllables(std::string_view transcript, std::string_view language);

// Syllables per second of speech; nullopt when the duration is not positive
// or the transcript has no nuclei.
std::optional<double> SpeakingRate(std::string_view transcript,
                                   std::string_view language,
                                   double speech_duration_s);

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_SYLLABLES_H_
