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

#include "speechdesc/evaluation/bleu.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using NgramCounts = std::map<std::vector<std::string>, long long>;

NgramCounts CountNgrams(const TokenSequence& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

TokenSequence SplitCommaTokens(std::string_view sequence) {
  TokenSequence tokens;
  std::size_t start = 0;
  while (start <= sequence.size()) {
    std::size_t end = sequence.find(',', start);
    if (end == std::string_view::npos) end = sequence.size();
    std::string_view token = sequence.substr(start, end - start);
    const std::size_t a = token.find_first_not_of(" \t\r\n");
    if (a != std::string_view::npos) {
      const std::size_t b = token.find_last_not_of(" \t\r\n");
      tokens.emplace_back(token.substr(a, b - a + 1));
    }
    start = end + 1;
  }
  return tokens;
}

BleuStatistics CollectBleuStatistics(const std::vector<TokenSequence>& candidates,
                                     const std::vector<TokenSequence>& references) {
  if (candidates.size() != references.size()) {
    throw ValidationError("BLEU: " + std::to_string(candidates.size()) +
                          " candidates vs " + std::to_string(references.size()) +
                          " references");
  }
  BleuStatistics stats;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    stats.candidate_length += static_cast<long long>(candidates[i].size());
    stats.reference_length += static_cast<long long>(references[i].size());
    for (int n = 1; n <= kBleuMaxOrder; ++n) {
      const NgramCounts cand = CountNgrams(candidates[i], static_cast<std::size_t>(n));
      const NgramCounts ref = CountNgrams(references[i], static_cast<std::size_t>(n));
      for (const auto& [gram, count] : cand) {
        stats.totals[n - 1] += count;
        auto it = ref.find(gram);
        if (it != ref.end()) stats.matches[n - 1] += std::min(count, it->second);
      }
    }
  }
  return stats;
}

double BleuFromStatistics(const BleuStatistics& stats) {
  if (stats.candidate_length == 0 || stats.matches[0] == 0) return 0.0;
  double log_precision = 0.0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    const double m = static_cast<double>(stats.matches[n]);
    const double t = static_cast<double>(stats.totals[n]);
    log_precision += n == 0 ? std::log(m / t) : std::log((m + 1.0) / (t + 1.0));
  }
  log_precision /= kBleuMaxOrder;
  const double c = static_cast<double>(stats.candidate_length);
  const double r = static_cast<double>(stats.reference_length);
  const double log_bp = c >= r ? 0.0 : 1.0 - r / c;
  return 100.0 * std::exp(log_precision + log_bp);
}

double CorpusBleu(const std::vector<TokenSequence>& candidates,
                  const std::vector<TokenSequence>& references) {
  return BleuFromStatistics(CollectBleuStatistics(candidates, references));
}

}  // namespace speechdesc
