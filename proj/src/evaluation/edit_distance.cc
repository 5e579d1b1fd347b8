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

#include "speechdesc/evaluation/edit_distance.h"

#include "speechdesc/errors.h"
#include "speechdesc/util/unicode.h"

namespace speechdesc {

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

ErrorRates CerWer(const std::vector<std::string>& references,
                  const std::vector<std::string>& hypotheses) {
  if (references.size() != hypotheses.size()) {
    throw ValidationError("CER/WER: " + std::to_string(references.size()) +
                          " references vs " + std::to_string(hypotheses.size()) +
                          " hypotheses");
  }
  ErrorRates rates;
  for (std::size_t i = 0; i < references.size(); ++i) {
    const std::string ref = NfcUtf8(references[i]);
    const std::string hyp = NfcUtf8(hypotheses[i]);
    const std::vector<char32_t> ref_chars = NfcCodepoints(ref);
    if (ref_chars.empty()) {
      ++rates.excluded;
      rates.warnings.push_back("pair " + std::to_string(i) + ": empty reference excluded");
      continue;
    }
    const std::vector<char32_t> hyp_chars = NfcCodepoints(hyp);
    rates.char_edits += Levenshtein<char32_t>(ref_chars, hyp_chars);
    rates.char_reference += ref_chars.size();
    const std::vector<std::string> ref_words = SplitWhitespace(ref);
    const std::vector<std::string> hyp_words = SplitWhitespace(hyp);
    rates.word_edits += Levenshtein<std::string>(ref_words, hyp_words);
    rates.word_reference += ref_words.size();
    ++rates.pairs;
  }
  if (rates.char_reference > 0) {
    rates.cer_pct = 100.0 * static_cast<double>(rates.char_edits) /
                    static_cast<double>(rates.char_reference);
  }
  if (rates.word_reference > 0) {
    rates.wer_pct = 100.0 * static_cast<double>(rates.word_edits) /
                    static_cast<double>(rates.word_reference);
  }
  return rates;
}

}  // namespace speechdesc
