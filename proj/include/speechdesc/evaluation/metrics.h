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

#ifndef SPEECHDESC_EVALUATION_METRICS_H_
#define SPEECHDESC_EVALUATION_METRICS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speechdesc/types.h"

namespace speechdesc {

// Percentage of exact label matches per binned attribute, keyed by attribute
// name. Throws ConfigError when any pair was binned under different config
// versions and ValidationError when the sequences differ in length.
std::map<std::string, double> AttributeAccuracy(
    std::span<const AttributeLabels> references,
    std::span<const AttributeLabels> candidates);

struct LabelPair {
  std::string utterance_id;
  AttributeLabels reference;
  AttributeLabels candidate;
};

// Rows of {"utterance_id", "reference": labels, "candidate": labels}.
std::vector<LabelPair> ReadLabelPairs(const std::filesystem::path& path);

struct ConfusionMatrix {
  std::vector<std::string> classes;
  std::vector<std::vector<long long>> counts;  // row = true class
  // Row-normalized percentages rounded half-even to 2 decimals, adjusted so
  // each non-empty row sums to exactly 100.00. Empty rows stay zero.
  std::vector<std::vector<double>> percent;

  double Percent(std::string_view true_class, std::string_view judged_class) const;
};

struct Judgment {
  std::string true_class;
  std::string judged_class;
  long long count = 1;
};

// Throws ValidationError naming any label outside classes.
ConfusionMatrix BuildConfusionMatrix(std::span<const Judgment> judgments,
                                     const std::vector<std::string>& classes);

// Rows of {"true", "judged", optional "count"}.
std::vector<Judgment> ReadJudgments(const std::filesystem::path& path);

struct Rating {
  std::string system;
  std::string utterance;
  std::string rater;
  double score = 0.0;
};

struct MushraSummary {
  std::string system;
  double mean = 0.0;
  std::optional<double> half_width;  // needs at least two ratings
  std::size_t n = 0;
};

// Per-system mean and two-sided Student-t confidence half-width, systems in
// name order. Throws ValidationError for a score outside [0, 100].
std::vector<MushraSummary> MushraAggregate(std::span<const Rating> ratings,
                                           double confidence = 0.95);

// Rows of {"system", "utterance", "rater", "score"}.
std::vector<Rating> ReadRatings(const std::filesystem::path& path);

// Round half to even at the given number of decimals.
double RoundHalfEven(double value, int decimals);

}  // namespace speechdesc

#endif  // SPEECHDESC_EVALUATION_METRICS_H_
