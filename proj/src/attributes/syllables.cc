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

#include "speechdesc/attributes/syllables.h"

#include <cstdint>
#include <string>
#include <vector>


#include "speechdesc/corpus/languages.h"
#include "speechdesc/errors.h"
#include "speechdesc/util/unicode.h"

namespace speechdesc {
namespace {

enum class Kind {
  kOther,           // breaks words, no nucleus
  kTransparent,     // combining marks that leave the state unchanged
  kIndependentVowel,
  kConsonant,       // carries an inherent vowel
  kDeadConsonant,   // consonant letter with no vowel
  kVowelSign,
  kVirama,
  kLatinVowel,
  kLatinConsonant,
  kArabicConsonant,
  kArabicLongVowel,
  kArabicShortVowel,
  kArabicSukun,
};

Kind ClassifyBrahmic(char32_t cp) {
  const char32_t block = cp & ~0x7Fu;
  const unsigned off = cp & 0x7Fu;
  const bool devanagari = block == 0x0900;
  const bool bengali = block == 0x0980;
  const bool gurmukhi = block == 0x0A00;
  const bool malayalam = block == 0x0D00;
  if (off <= 0x03) return Kind::kTransparent;
  if (off == 0x04) return devanagari ? Kind::kIndependentVowel : Kind::kTransparent;
  if (off <= 0x14) return Kind::kIndependentVowel;
  if (off <= 0x39) return Kind::kConsonant;
  if (off == 0x3A || off == 0x3B) return Kind::kVowelSign;
  if (off == 0x3C) return Kind::kTransparent;
  if (off == 0x3D) return Kind::kOther;
  if (off <= 0x4C) return Kind::kVowelSign;
  if (off == 0x4D) return Kind::kVirama;
  if (off == 0x4E) {
    if (devanagari) return Kind::kVowelSign;
    if (bengali || malayalam) return Kind::kDeadConsonant;
    return Kind::kOther;
  }
  if (off == 0x4F) return devanagari ? Kind::kVowelSign : Kind::kOther;
  if (off <= 0x54) {
    if (malayalam && off == 0x54) return Kind::kDeadConsonant;
    return Kind::kTransparent;
  }
  if (off <= 0x57) {
    if (malayalam && off <= 0x56) return Kind::kDeadConsonant;
    return Kind::kVowelSign;
  }
  if (off <= 0x5F) return Kind::kConsonant;
  if (off <= 0x61) return Kind::kIndependentVowel;
  if (off <= 0x63) return Kind::kVowelSign;
  if (off <= 0x6F) return Kind::kOther;  // punctuation and digits
  if (devanagari) {
    if (off >= 0x72 && off <= 0x77) return Kind::kIndependentVowel;
    if (off >= 0x78) return Kind::kConsonant;
    return Kind::kOther;
  }
  if (bengali && (off == 0x70 || off == 0x71)) return Kind::kConsonant;
  if (gurmukhi) {
    if (off == 0x70 || off == 0x71 || off == 0x75) return Kind::kTransparent;
    if (off == 0x72 || off == 0x73) return Kind::kConsonant;  // vowel carriers
    return Kind::kOther;
  }
  if (block == 0x0B00 && off == 0x71) return Kind::kConsonant;
  if (malayalam && off >= 0x7A) return Kind::kDeadConsonant;
  return Kind::kOther;
}

bool IsLatinVowel(char32_t cp) {
  switch (cp) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
    case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
      return true;
    default:
      break;
  }
  return (cp >= 0xC0 && cp <= 0xC6) || (cp >= 0xC8 && cp <= 0xCF) ||
         (cp >= 0xD2 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDD) ||
         (cp >= 0xE0 && cp <= 0xE6) || (cp >= 0xE8 && cp <= 0xEF) ||
         (cp >= 0xF2 && cp <= 0xF6) || (cp >= 0xF8 && cp <= 0xFD) || cp == 0xFF;
}

Kind Classify(char32_t cp) {
  if (cp >= 0x0900 && cp <= 0x0D7F) return ClassifyBrahmic(cp);
  if (cp == 0x200C || cp == 0x200D) return Kind::kTransparent;
  if (cp < 0x80) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) {
      return IsLatinVowel(cp) ? Kind::kLatinVowel : Kind::kLatinConsonant;
    }
    if (cp == '\'') return Kind::kTransparent;  // don't, o'clock
    return Kind::kOther;
  }
  if (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7) {
    return IsLatinVowel(cp) ? Kind::kLatinVowel : Kind::kLatinConsonant;
  }
  // Ol Chiki.
  if (cp >= 0x1C5A && cp <= 0x1C77) {
    switch (cp) {
      case 0x1C5A: case 0x1C5F: case 0x1C64: case 0x1C69: case 0x1C6E:
      case 0x1C73:
        return Kind::kLatinVowel;
      default:
        return Kind::kLatinConsonant;
    }
  }
  if (cp >= 0x1C78 && cp <= 0x1C7D) return Kind::kTransparent;
  // Meetei Mayek.
  if (cp >= 0xABC0 && cp <= 0xABDA) return Kind::kConsonant;
  if (cp >= 0xABDB && cp <= 0xABE2) return Kind::kDeadConsonant;
  if (cp >= 0xABE3 && cp <= 0xABEA) return Kind::kVowelSign;
  if (cp == 0xABEC) return Kind::kTransparent;
  if (cp == 0xABED) return Kind::kVirama;
  // Arabic and its Perso-Arabic extensions.
  if (cp >= 0x0620 && cp <= 0x06FF) {
    switch (cp) {
      case 0x0622: case 0x0623: case 0x0625: case 0x0627:  // alef forms
      case 0x0624: case 0x0648:                            // waw
      case 0x0626: case 0x0649: case 0x064A: case 0x06CC:  // yeh forms
      case 0x06D2: case 0x06D3:                            // yeh barree
        return Kind::kArabicLongVowel;
      case 0x064B: case 0x064C: case 0x064D: case 0x064E: case 0x064F:
      case 0x0650:
        return Kind::kArabicShortVowel;
      case 0x0652:
        return Kind::kArabicSukun;
      default:
        break;
    }
    if ((cp >= 0x0620 && cp <= 0x064A) || (cp >= 0x066E && cp <= 0x06D3) ||
        (cp >= 0x06FA && cp <= 0x06FC)) {
      return Kind::kArabicConsonant;
    }
    return Kind::kTransparent;  // shadda, superscript alef, other marks
  }
  return Kind::kOther;
}

class NucleusCounter {
 public:
  void Feed(Kind kind) {
    if (kind == Kind::kTransparent) return;

    if (pending_consonant_) {
      pending_consonant_ = false;
      if (kind == Kind::kVirama) {
        previous_ = kind;
        return;
      }
      ++count_;  // the consonant's vowel: inherent or the sign that follows
      if (kind == Kind::kVowelSign) {
        previous_ = kind;
        return;
      }
    } else if (kind == Kind::kVowelSign) {
      // Split vowels leave a second sign; an orphan sign still voices.
      if (previous_ != Kind::kVowelSign) ++count_;
      previous_ = kind;
      return;
    }

    if (arabic_pending_ && kind != Kind::kArabicShortVowel &&
        kind != Kind::kArabicLongVowel && kind != Kind::kArabicSukun) {
      // A consonant followed by another letter voices; word-final does not.
      if (kind == Kind::kArabicConsonant) ++count_;
      arabic_pending_ = false;
    }

    switch (kind) {
      case Kind::kIndependentVowel:
        ++count_;
        break;
      case Kind::kConsonant:
        pending_consonant_ = true;
        break;
      case Kind::kLatinVowel:
        if (previous_ != Kind::kLatinVowel) ++count_;
        break;
      case Kind::kArabicConsonant:
        arabic_pending_ = true;
        break;
      case Kind::kArabicShortVowel:
      case Kind::kArabicLongVowel:
        if (arabic_pending_) {
          ++count_;
          arabic_pending_ = false;
          kind = Kind::kArabicShortVowel;  // merged; a following letter starts anew
        } else if (kind == Kind::kArabicLongVowel &&
                   previous_ != Kind::kArabicShortVowel) {
          ++count_;
        }
        break;
      case Kind::kArabicSukun:
        arabic_pending_ = false;
        break;
      default:
        break;
    }
    previous_ = kind;
  }

  int Finish() {
    if (pending_consonant_) ++count_;
    pending_consonant_ = false;
    arabic_pending_ = false;
    return count_;
  }

 private:
  int count_ = 0;
  bool pending_consonant_ = false;
  bool arabic_pending_ = false;
  Kind previous_ = Kind::kOther;
};

}  // namespace

int CountSyllables(std::string_view transcript, std::string_view language) {
  if (!IsSupportedLanguage(language)) {
    throw ValidationError("unsupported language '" + std::string(language) + "'");
  }
  NucleusCounter counter;
  for (char32_t cp : NfcCodepoints(transcript)) counter.Feed(Classify(cp));
  return counter.Finish();
}

std::optional<double> SpeakingRate(std::string_view transcript,
                                   std::string_view language,
                                   double speech_duration_s) {
  if (!(speech_duration_s > 0.0)) return std::nullopt;
  const int nuclei = CountSyllables(transcript, language);
  if (nuclei == 0) return std::nullopt;
  return nuclei / speech_duration_s;
}

}  // namespace speechdesc
