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

#include "speechdesc/evaluation/report.h"

#include <cstdio>

#include "speechdesc/types.h"

namespace speechdesc {
namespace {

using nlohmann::json;

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

json EvaluationReport::ToJson() const {
  json j;
  j["config_version"] = config_version;
  j["evaluated"] = evaluated;
  j["missing_clips"] = missing_clips;
  j["if_bleu"] = if_bleu ? json(*if_bleu) : json(nullptr);
  j["per_attribute_accuracy"] = per_attribute_accuracy;
  if (error_rates) {
    j["cer_pct"] = error_rates->cer_pct;
    j["wer_pct"] = error_rates->wer_pct;
    j["asr_pairs"] = error_rates->pairs;
    j["asr_excluded"] = error_rates->excluded;
  } else {
    j["cer_pct"] = nullptr;
    j["wer_pct"] = nullptr;
  }
  j["mos"] = mos ? json(*mos) : json(nullptr);
  j["s_sim"] = speaker_similarity ? json(*speaker_similarity) : json(nullptr);
  if (confusion) {
    j["confusion"] = {{"classes", confusion->classes},
                      {"percent", confusion->percent},
                      {"counts", confusion->counts}};
  }
  if (!mushra.empty()) {
    json systems = json::array();
    for (const MushraSummary& s : mushra) {
      systems.push_back({{"system", s.system},
                         {"mean", s.mean},
                         {"half_width", s.half_width ? json(*s.half_width) : json(nullptr)},
                         {"n", s.n}});
    }
    j["mushra"] = systems;
  }
  j["warnings"] = warnings;
  return j;
}

std::string EvaluationReport::ToText() const {
  std::string out;
  auto opt = [](const std::optional<double>& v, int decimals) {
    return v ? Fixed(*v, decimals) : std::string("-");
  };
  out += "System metrics (config " + config_version + ", " + std::to_string(evaluated) +
         " evaluated, " + std::to_string(missing_clips) + " missing)\n";
  out += "  IF-BLEU  CER (%)  WER (%)  MOS    S-SIM\n";
  out += "  " + Pad(opt(if_bleu, 2), 9) +
         Pad(error_rates ? Fixed(error_rates->cer_pct, 2) : "-", 9) +
         Pad(error_rates ? Fixed(error_rates->wer_pct, 2) : "-", 9) +
         Pad(opt(mos, 2), 7) + opt(speaker_similarity, 3) + "\n";

  if (!per_attribute_accuracy.empty()) {
    out += "\nPer-attribute accuracy (%)\n";
    std::string header = "  ", row = "  ";
    for (BinnedAttribute a : kAllBinnedAttributes) {
      auto it = per_attribute_accuracy.find(std::string(ToString(a)));
      if (it == per_attribute_accuracy.end()) continue;
      const std::string name(MeasurementName(a));
      const std::size_t width = std::max<std::size_t>(name.size(), 6) + 2;
      header += Pad(name, width);
      row += Pad(Fixed(it->second, 2), width);
    }
    out += header + "\n" + row + "\n";
  }

  if (!mushra.empty()) {
    out += "\nMUSHRA (mean +/- 95% half-width)\n";
    for (const MushraSummary& s : mushra) {
      out += "  " + Pad(s.system, 16) + Fixed(s.mean, 1) + " +/- " +
             (s.half_width ? Fixed(*s.half_width, 1) : std::string("-")) +
             "  (n=" + std::to_string(s.n) + ")\n";
    }
  }

  if (confusion) {
    out += "\nConfusion (%; rows = intended, columns = judged)\n";
    out += "  " + Pad("", 16);
    for (const std::string& c : confusion->classes) out += Pad(c, 10);
    out += "\n";
    for (std::size_t r = 0; r < confusion->classes.size(); ++r) {
      out += "  " + Pad(confusion->classes[r], 16);
      for (double v : confusion->percent[r]) out += Pad(Fixed(v, 2), 10);
      out += "\n";
    }
  }
  for (const std::string& w : warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace speechdesc
