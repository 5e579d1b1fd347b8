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

#ifndef SPEECHDESC_EVALUATION_BLEU_H_
#define SPEECHDESC_EVALUATION_BLEU_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace speechdesc {

using TokenSequence = std::vector<std::string>;

// Splits on commas and trims surrounding whitespace; empty tokens dropped.
TokenSequence SplitCommaTokens(std::string_view sequence);

inline constexpr int kBleuMaxOrder = 4;

struct BleuStatistics {
  std::array<long long, kBleuMaxOrder> matches{};
  std::array<long long, kBleuMaxOrder> totals{};
  long long candidate_length = 0;
  long long reference_length = 0;
};

BleuStatistics CollectBleuStatistics(const std::vector<TokenSequence>& candidates,
                                     const std::vector<TokenSequence>& references);

// Corpus BLEU on [0, 100]: clipped n-gram precisions up to 4-grams with
// add-one smoothing for orders 2 and above, geometric mean, brevity penalty.
// Throws ValidationError when the corpora differ in length.
double CorpusBleu(const std::vector<TokenSequence>& candidates,
                  const std::vector<TokenSequence>& references);
double BleuFromStatistics(const BleuStatistics& stats);

}  // namespace speechdesc

#endif  // SPEECHDESC_EVALUATION_BLEU_H_
