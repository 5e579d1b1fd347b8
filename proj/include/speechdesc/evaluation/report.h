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

#ifndef SPEECHDESC_EVALUATION_REPORT_H_
#define SPEECHDESC_EVALUATION_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "speechdesc/evaluation/edit_distance.h"
#include "speechdesc/evaluation/metrics.h"

namespace speechdesc {

struct EvaluationReport {
  std::string config_version;
  std::optional<double> if_bleu;
  std::map<std::string, double> per_attribute_accuracy;
  std::optional<ErrorRates> error_rates;
  std::optional<ConfusionMatrix> confusion;
  std::vector<MushraSummary> mushra;
  // Ingested from external model outputs, never computed here.
  std::optional<double> mos;
  std::optional<double> speaker_similarity;
  std::size_t evaluated = 0;
  std::size_t missing_clips = 0;
  std::vector<std::string> warnings;

  nlohmann::json ToJson() const;
  // Plain-text tables: system metrics, per-attribute accuracy, MUSHRA,
  // confusion matrix.
  std::string ToText() const;
};

}  // namespace speechdesc

#endif  // SPEECHDESC_EVALUATION_REPORT_H_
