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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace speechdesc::testing {

double OracleC50(const std::vector<float>& rir, int sample_rate_hz) {
  long double peak = 0;
  for (float v : rir) peak = std::max<long double>(peak, std::fabs(static_cast<long double>(v)));
  std::size_t onset = 0;
  while (std::fabs(static_cast<long double>(rir[onset])) < peak / 10) ++onset;
  long double early = 0, late = 0;
  for (std::size_t n = onset; n < rir.size(); ++n) {
    const long double t = static_cast<long double>(n - onset) / sample_rate_hz;
    const long double e = static_cast<long double>(rir[n]) * rir[n];
    if (t < 0.05L) {
      early += e;
    } else {
      late += e;
    }
  }
  return static_cast<double>(10 * std::log10(early / late));
}

double OracleBleu(const std::vector<std::vector<std::string>>& candidates,
                  const std::vector<std::vector<std::string>>& references) {
  long double log_sum = 0;
  double c = 0, r = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    c += candidates[i].size();
    r += references[i].size();
  }
  for (int n = 1; n <= 4; ++n) {
    double matches = 0, total = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::map<std::vector<std::string>, int> cand, ref;
      const auto& x = candidates[i];
      const auto& y = references[i];
      for (std::size_t k = 0; k + n <= x.size(); ++k) {
        ++cand[std::vector<std::string>(x.begin() + k, x.begin() + k + n)];
      }
      for (std::size_t k = 0; k + n <= y.size(); ++k) {
        ++ref[std::vector<std::string>(y.begin() + k, y.begin() + k + n)];
      }
      for (const auto& [gram, count] : cand) {
        total += count;
        auto it = ref.find(gram);
        if (it != ref.end()) matches += std::min(count, it->second);
      }
    }
    if (n == 1 && matches == 0) return 0.0;
    const long double p = n == 1 ? matches / total : (matches + 1) / (total + 1);
    log_sum += std::log(p) / 4;
  }
  const long double bp = c < r ? std::exp(1 - r / c) : 1;
  return static_cast<double>(100 * bp * std::exp(log_sum));
}

std::vector<char32_t> DecodeUtf8(const std::string& text) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < text.size();) {
    const auto b = static_cast<unsigned char>(text[i]);
    int len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    char32_t cp = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    if (i + len > text.size()) throw std::runtime_error("truncated UTF-8");
    for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::vector<std::string> SplitOnSpaces(const std::string& text) {
  std::vector<std::string> out;
  std::string word;
  for (char ch : text) {
    if (ch == ' ') {
      if (!word.empty()) out.push_back(word);
      word.clear();
    } else {
      word += ch;
    }
  }
  if (!word.empty()) out.push_back(word);
  return out;
}

template <typename T>
std::size_t OracleEditDistance(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

template std::size_t OracleEditDistance(const std::vector<char32_t>&,
                                        const std::vector<char32_t>&);
template std::size_t OracleEditDistance(const std::vector<std::string>&,
                                        const std::vector<std::string>&);

}  // namespace speechdesc::testing
