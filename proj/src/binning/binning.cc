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

#include "speechdesc/binning/binning.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "speechdesc/errors.h"
#include "speechdesc/util/hash.h"

namespace speechdesc {
namespace {

using nlohmann::json;

double TypeSevenQuantile(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(sorted.size() - 1, lo + 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

const std::vector<std::string> kPitchLabels = {
    "very low pitch", "low pitch", "moderate pitch", "high pitch",
    "very high pitch"};

}  // namespace

std::size_t BinSpec::BinIndex(double value) const {
  return static_cast<std::size_t>(
      std::upper_bound(boundaries.begin(), boundaries.end(), value) -
      boundaries.begin());
}

std::string BinKey(BinnedAttribute attribute, Gender gender) {
  if (attribute == BinnedAttribute::kPitch) {
    return "pitch/" + std::string(ToString(gender));
  }
  return std::string(ToString(attribute));
}

BinningConfig BinningConfig::Default() {
  BinningConfig config;
  config.version_ = std::string(kDefaultBinningVersion);
  config.specs_["pitch/female"] = {{160, 190, 220, 250}, kPitchLabels, 2};
  config.specs_["pitch/male"] = {{95, 115, 135, 160}, kPitchLabels, 2};
  config.specs_["pitch/unspecified"] = {{110, 145, 180, 215}, kPitchLabels, 2};
  config.specs_["pitch_variation"] = {{25}, {"monotone", "expressive tone"}, 0};
  config.specs_["reverb"] = {{12, 24, 36, 48},
                             {"very distant sounding", "distant sounding",
                              "slightly distant sounding",
                              "slightly close sounding", "very close sounding"},
                             2};
  config.specs_["snr"] = {
      {5, 15, 30, 50},
      {"very noisy", "noisy", "slightly noisy", "clear", "very clear"},
      2};
  config.specs_["rate"] = {{3, 4, 5, 6},
                           {"slow pace", "slightly slow pace", "moderate pace",
                            "slightly fast pace", "fast pace"},
                           2};
  config.specs_["quality"] = {{2, 3, 4},
                              {"poor speech quality", "moderate speech quality",
                               "good speech quality", "great speech quality"},
                              1};
  return config;
}

BinningConfig BinningConfig::FromJson(const json& j) {
  BinningConfig config;
  try {
    config.version_ = j.at("version").get<std::string>();
    for (const auto& [key, value] : j.at("attributes").items()) {
      BinSpec spec;
      spec.boundaries = value.at("boundaries").get<std::vector<double>>();
      spec.labels = value.at("labels").get<std::vector<std::string>>();
      spec.neutral_index = value.at("neutral_index").get<std::size_t>();
      config.specs_[key] = std::move(spec);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("binning config: ") + e.what());
  }
  config.Validate();
  return config;
}

BinningConfig BinningConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open binning config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("binning config " + path.string() + ": " + e.what());
  }
  return FromJson(j);
}

json BinningConfig::ToJson() const {
  json attributes = json::object();
  for (const auto& [key, spec] : specs_) {
    attributes[key] = {{"boundaries", spec.boundaries},
                       {"labels", spec.labels},
                       {"neutral_index", spec.neutral_index}};
  }
  return {{"version", version_}, {"attributes", attributes}};
}

void BinningConfig::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write binning config " + path.string());
  out << ToJson().dump(2) << '\n';
}

void BinningConfig::Validate() const {
  if (version_.empty()) throw ConfigError("binning config: empty version");
  for (std::string_view key : kBinKeys) {
    auto it = specs_.find(key);
    if (it == specs_.end()) {
      throw ConfigError("binning config: missing attribute " + std::string(key));
    }
    const BinSpec& spec = it->second;
    for (std::size_t i = 0; i < spec.boundaries.size(); ++i) {
      if (!std::isfinite(spec.boundaries[i]) ||
          (i > 0 && !(spec.boundaries[i] > spec.boundaries[i - 1]))) {
        throw ConfigError("binning config: boundaries of " + std::string(key) +
                          " are not strictly increasing");
      }
    }
    if (spec.labels.size() != spec.boundaries.size() + 1) {
      throw ConfigError("binning config: " + std::string(key) +
                        " needs exactly one more label than boundaries");
    }
    if (spec.neutral_index >= spec.labels.size()) {
      throw ConfigError("binning config: neutral index out of range for " +
                        std::string(key));
    }
    for (const std::string& label : spec.labels) {
      if (label.empty() || label.find(',') != std::string::npos) {
        throw ConfigError("binning config: invalid label in " + std::string(key));
      }
    }
  }
}

const BinSpec& BinningConfig::spec(std::string_view key) const {
  auto it = specs_.find(key);
  if (it == specs_.end()) {
    throw ConfigError("binning config: missing attribute " + std::string(key));
  }
  return it->second;
}

void BinningConfig::set_spec(std::string_view key, BinSpec spec) {
  specs_[std::string(key)] = std::move(spec);
}

std::vector<std::string> BinningConfig::Vocabulary(
    BinnedAttribute attribute) const {
  std::vector<std::string> out;
  auto add = [&out](const BinSpec& s) {
    for (const std::string& label : s.labels) {
      if (std::find(out.begin(), out.end(), label) == out.end()) {
        out.push_back(label);
      }
    }
  };
  if (attribute == BinnedAttribute::kPitch) {
    for (Gender g : kAllGenders) add(spec(attribute, g));
  } else {
    add(spec(attribute, Gender::kUnspecified));
  }
  return out;
}

std::string BinningConfig::ContentDigest() const {
  json body = ToJson();
  body.erase("version");
  return HexDigest(Fnv1a64(body.dump()));
}

void AttributeSamples::Add(const AcousticAttributes& a, Gender gender) {
  if (a.f0_mean_hz) {
    f0_mean_by_gender[static_cast<std::size_t>(gender)].push_back(*a.f0_mean_hz);
  }
  if (a.f0_std_hz) f0_std.push_back(*a.f0_std_hz);
  if (a.c50_db) c50.push_back(*a.c50_db);
  if (a.snr_db) snr.push_back(*a.snr_db);
  if (a.speaking_rate_sps) rate.push_back(*a.speaking_rate_sps);
  if (a.quality_score) quality.push_back(*a.quality_score);
}

const std::vector<double>& AttributeSamples::ForKey(std::string_view key) const {
  if (key == "pitch/male") return f0_mean_by_gender[0];
  if (key == "pitch/female") return f0_mean_by_gender[1];
  if (key == "pitch/unspecified") return f0_mean_by_gender[2];
  if (key == "pitch_variation") return f0_std;
  if (key == "reverb") return c50;
  if (key == "snr") return snr;
  if (key == "rate") return rate;
  if (key == "quality") return quality;
  throw ConfigError("unknown bin key " + std::string(key));
}

FitResult FitBins(const AttributeSamples& samples, const FitOptions& options) {
  FitResult result;
  result.config = BinningConfig::Default();
  for (std::string_view key : kBinKeys) {
    const BinSpec& base = result.config.spec(key);
    std::vector<double> quantiles;
    if (auto it = options.quantiles.find(key); it != options.quantiles.end()) {
      quantiles = it->second;
      if (quantiles.size() + 1 != base.labels.size()) {
        throw ConfigError("fit_bins: " + std::string(key) + " needs " +
                          std::to_string(base.labels.size() - 1) + " quantiles");
      }
      for (std::size_t i = 0; i < quantiles.size(); ++i) {
        if (!(quantiles[i] > 0.0 && quantiles[i] < 1.0) ||
            (i > 0 && !(quantiles[i] > quantiles[i - 1]))) {
          throw ConfigError("fit_bins: quantiles for " + std::string(key) +
                            " must be strictly increasing in (0, 1)");
        }
      }
    } else {
      const double n = static_cast<double>(base.labels.size());
      for (std::size_t i = 1; i < base.labels.size(); ++i) {
        quantiles.push_back(static_cast<double>(i) / n);
      }
    }

    std::vector<double> values;
    for (double v : samples.ForKey(key)) {
      if (std::isfinite(v)) values.push_back(v);
    }
    if (values.size() < options.min_samples) {
      result.flags.push_back("fit_fallback:" + std::string(key) +
                             ":insufficient_samples");
      continue;
    }
    std::sort(values.begin(), values.end());
    BinSpec fitted = base;
    fitted.boundaries.clear();
    bool degenerate = false;
    for (double q : quantiles) {
      const double b = TypeSevenQuantile(values, q);
      if (!fitted.boundaries.empty() && !(b > fitted.boundaries.back())) {
        degenerate = true;
        break;
      }
      fitted.boundaries.push_back(b);
    }
    if (degenerate) {
      result.flags.push_back("fit_fallback:" + std::string(key) +
                             ":degenerate_boundaries");
      continue;
    }
    result.config.set_spec(key, std::move(fitted));
  }
  result.config.set_version("fit-" + result.config.ContentDigest());
  result.config.Validate();
  return result;
}

AttributeLabels BinAttributes(const AcousticAttributes& attributes,
                              const SpeakerMetadata& speaker,
                              const StyleMetadata& style,
                              const BinningConfig& config) {
  AttributeLabels labels;
  labels.gender = speaker.gender;
  labels.age_group = speaker.age_group;
  labels.accent = speaker.accent;
  labels.speaker_name = speaker.display_name;
  labels.style = style.style;
  labels.env_tags = style.env_tags;
  labels.config_version = config.version();
  for (BinnedAttribute a : kAllBinnedAttributes) {
    const BinSpec& spec = config.spec(a, speaker.gender);
    const std::optional<double> value = MeasurementOf(attributes, a);
    if (value && std::isfinite(*value)) {
      labels.label(a) = spec.LabelFor(*value);
    } else {
      labels.label(a) = spec.neutral_label();
      labels.flagged.emplace_back(ToString(a));
    }
  }
  return labels;
}

std::vector<std::string> LabelsToTokens(const AttributeLabels& labels) {
  std::vector<std::string> tokens;
  tokens.emplace_back(ToString(labels.gender));
  for (BinnedAttribute a : kAllBinnedAttributes) tokens.push_back(labels.label(a));
  tokens.emplace_back(ToString(labels.style));
  return tokens;
}

std::string LabelsToSequence(const AttributeLabels& labels) {
  std::string out;
  for (const std::string& token : LabelsToTokens(labels)) {
    if (!out.empty()) out += ", ";
    out += token;
  }
  return out;
}

void RequireSameVersion(std::string_view expected, std::string_view actual) {
  if (expected != actual) {
    throw ConfigError("binning config version mismatch: " +
                      std::string(expected) + " vs " + std::string(actual));
  }
}

}  // namespace speechdesc
