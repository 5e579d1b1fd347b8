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

#ifndef SPEECHDESC_EVALUATION_EDIT_DISTANCE_H_
#define SPEECHDESC_EVALUATION_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace speechdesc {

// Unit-cost Levenshtein distance, two-row dynamic programme.
template <typename T>
std::size_t Levenshtein(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::string> SplitWhitespace(std::string_view text);

struct ErrorRates {
  double cer_pct = 0.0;
  double wer_pct = 0.0;
  std::size_t char_edits = 0;
  std::size_t char_reference = 0;
  std::size_t word_edits = 0;
  std::size_t word_reference = 0;
  std::size_t pairs = 0;
  std::size_t excluded = 0;
  std::vector<std::string> warnings;
};

// Summed edits over summed reference length, in percent, after NFC
// normalization. Pairs whose reference is empty are excluded with a warning.
// Throws ValidationError when the lists differ in length.
ErrorRates CerWer(const std::vector<std::string>& references,
                  const std::vector<std::string>& hypotheses);

}  // namespace speechdesc

#endif  // SPEECHDESC_EVALUATION_EDIT_DISTANCE_H_
