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

#include "speechdesc/evaluation/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "json.hpp"
#include "speechdesc/binning/binning.h"
#include "speechdesc/corpus/manifest.h"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using nlohmann::json;

template <typename T, typename Fn>
std::vector<T> ReadRows(const std::filesystem::path& path, Fn&& decode) {
  std::vector<T> rows;
  ForEachLine(path, [&](std::size_t number, const std::string& line) {
    try {
      rows.push_back(decode(json::parse(line)));
    } catch (const std::exception& e) {
      throw ValidationError(path.string() + ":" + std::to_string(number) + ": " +
                            e.what());
    }
  });
  return rows;
}

}  // namespace

double RoundHalfEven(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  // Snap values that are a ulp or so away from a tie onto it.
  const double snapped = std::nearbyint(scaled * 1e6) / 1e6;
  const double floor_v = std::floor(snapped);
  const double frac = snapped - floor_v;
  double rounded;
  if (frac > 0.5) {
    rounded = floor_v + 1.0;
  } else if (frac < 0.5) {
    rounded = floor_v;
  } else {
    rounded = std::fmod(floor_v, 2.0) == 0.0 ? floor_v : floor_v + 1.0;
  }
  return rounded / scale;
}

std::map<std::string, double> AttributeAccuracy(
    std::span<const AttributeLabels> references,
    std::span<const AttributeLabels> candidates) {
  if (references.size() != candidates.size()) {
    throw ValidationError("attribute accuracy: " + std::to_string(references.size()) +
                          " references vs " + std::to_string(candidates.size()) +
                          " candidates");
  }
  std::map<std::string, double> out;
  std::array<std::size_t, kNumBinnedAttributes> hits{};
  for (std::size_t i = 0; i < references.size(); ++i) {
    RequireSameVersion(references[i].config_version, candidates[i].config_version);
    for (BinnedAttribute a : kAllBinnedAttributes) {
      if (references[i].label(a) == candidates[i].label(a)) {
        ++hits[static_cast<std::size_t>(a)];
      }
    }
  }
  for (BinnedAttribute a : kAllBinnedAttributes) {
    out[std::string(ToString(a))] =
        references.empty() ? 0.0
                           : 100.0 * static_cast<double>(hits[static_cast<std::size_t>(a)]) /
                                 static_cast<double>(references.size());
  }
  return out;
}

std::vector<LabelPair> ReadLabelPairs(const std::filesystem::path& path) {
  return ReadRows<LabelPair>(path, [](const json& j) {
    LabelPair pair;
    pair.utterance_id = j.value("utterance_id", "");
    pair.reference = AttributeLabelsFromJson(j.at("reference"));
    pair.candidate = AttributeLabelsFromJson(j.at("candidate"));
    return pair;
  });
}

double ConfusionMatrix::Percent(std::string_view true_class,
                                std::string_view judged_class) const {
  auto row = std::find(classes.begin(), classes.end(), true_class);
  auto col = std::find(classes.begin(), classes.end(), judged_class);
  if (row == classes.end() || col == classes.end()) {
    throw ValidationError("confusion matrix: unknown class");
  }
  return percent[static_cast<std::size_t>(row - classes.begin())]
                [static_cast<std::size_t>(col - classes.begin())];
}

ConfusionMatrix BuildConfusionMatrix(std::span<const Judgment> judgments,
                                     const std::vector<std::string>& classes) {
  const std::size_t k = classes.size();
  ConfusionMatrix m;
  m.classes = classes;
  m.counts.assign(k, std::vector<long long>(k, 0));
  m.percent.assign(k, std::vector<double>(k, 0.0));
  auto index = [&classes](const std::string& label) {
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) {
      throw ValidationError("confusion matrix: label '" + label + "' is not a class");
    }
    return static_cast<std::size_t>(it - classes.begin());
  };
  for (const Judgment& j : judgments) {
    if (j.count < 0) throw ValidationError("confusion matrix: negative count");
    m.counts[index(j.true_class)][index(j.judged_class)] += j.count;
  }
  for (std::size_t r = 0; r < k; ++r) {
    const long long total = std::accumulate(m.counts[r].begin(), m.counts[r].end(), 0LL);
    if (total == 0) continue;
    // Work in hundredths of a percent to keep the row sum exact.
    std::vector<long long> units(k);
    std::vector<std::pair<double, std::size_t>> remainders;
    long long assigned = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const double exact = 10000.0 * static_cast<double>(m.counts[r][c]) /
                           static_cast<double>(total);
      units[c] = std::llround(RoundHalfEven(exact, 0));
      assigned += units[c];
      remainders.emplace_back(exact - static_cast<double>(units[c]), c);
    }
    // Largest-remainder correction toward 10000 units.
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; assigned < 10000 && i < remainders.size(); ++i, ++assigned) {
      ++units[remainders[i].second];
    }
    for (std::size_t i = remainders.size(); assigned > 10000 && i-- > 0; --assigned) {
      if (units[remainders[i].second] > 0) --units[remainders[i].second];
    }
    for (std::size_t c = 0; c < k; ++c) {
      m.percent[r][c] = static_cast<double>(units[c]) / 100.0;
    }
  }
  return m;
}

std::vector<Judgment> ReadJudgments(const std::filesystem::path& path) {
  return ReadRows<Judgment>(path, [](const json& j) {
    Judgment out;
    out.true_class = j.at("true").get<std::string>();
    out.judged_class = j.at("judged").get<std::string>();
    out.count = j.value("count", 1LL);
    return out;
  });
}

std::vector<MushraSummary> MushraAggregate(std::span<const Rating> ratings,
                                           double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ValidationError("MUSHRA: confidence must lie in (0, 1)");
  }
  std::map<std::string, std::vector<double>> by_system;
  for (const Rating& r : ratings) {
    if (!(r.score >= 0.0 && r.score <= 100.0)) {
      throw ValidationError("MUSHRA: score " + std::to_string(r.score) + " of system " +
                            r.system + " is outside [0, 100]");
    }
    by_system[r.system].push_back(r.score);
  }
  std::vector<MushraSummary> out;
  for (auto& [system, scores] : by_system) {
    // Sorting makes the floating-point sums independent of input order.
    std::sort(scores.begin(), scores.end());
    MushraSummary s;
    s.system = system;
    s.n = scores.size();
    double sum = 0.0;
    for (double v : scores) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n >= 2) {
      double ss = 0.0;
      for (double v : scores) ss += (v - s.mean) * (v - s.mean);
      const double sd = std::sqrt(ss / static_cast<double>(s.n - 1));
      const boost::math::students_t dist(static_cast<double>(s.n - 1));
      const double t = boost::math::quantile(dist, 0.5 + confidence / 2.0);
      s.half_width = t * sd / std::sqrt(static_cast<double>(s.n));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Rating> ReadRatings(const std::filesystem::path& path) {
  return ReadRows<Rating>(path, [](const json& j) {
    Rating r;
    r.system = j.at("system").get<std::string>();
    r.utterance = j.value("utterance", "");
    r.rater = j.value("rater", "");
    r.score = j.at("score").get<double>();
    return r;
  });
}

}  // namespace speechdesc
