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

#ifndef SPEECHDESC_BINNING_BINNING_H_
#define SPEECHDESC_BINNING_BINNING_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "speechdesc/types.h"

namespace speechdesc {

// Ordered boundaries and labels for one attribute. Value v falls in bin i
// when boundaries[i-1] <= v < boundaries[i].
struct BinSpec {
  std::vector<double> boundaries;
  std::vector<std::string> labels;
  // Label used when the measurement is undefined.
  std::size_t neutral_index = 0;

  std::size_t BinIndex(double value) const;
  const std::string& LabelFor(double value) const {
    return labels[BinIndex(value)];
  }
  const std::string& neutral_label() const { return labels[neutral_index]; }

  bool operator==(const BinSpec&) const = default;
};

// Keys: "pitch/female", "pitch/male", "pitch/unspecified", "pitch_variation",
// "reverb", "snr", "rate", "quality".
inline constexpr std::array<std::string_view, 8> kBinKeys = {
    "pitch/female", "pitch/male", "pitch/unspecified", "pitch_variation",
    "reverb",       "snr",        "rate",              "quality"};

std::string BinKey(BinnedAttribute attribute, Gender gender);

class BinningConfig {
 public:
  static BinningConfig Default();
  static BinningConfig FromJson(const nlohmann::json& json);
  static BinningConfig Load(const std::filesystem::path& path);

  nlohmann::json ToJson() const;
  void Save(const std::filesystem::path& path) const;

  // Throws ConfigError on a missing key, unsorted boundaries, a label count
  // that is not boundaries + 1, or an out-of-range neutral index.
  void Validate() const;

  const BinSpec& spec(std::string_view key) const;
  const BinSpec& spec(BinnedAttribute attribute, Gender gender) const {
    return spec(BinKey(attribute, gender));
  }
  void set_spec(std::string_view key, BinSpec spec);

  const std::string& version() const { return version_; }
  void set_version(std::string version) { version_ = std::move(version); }

  // Every label that may appear for an attribute, pitch labels merged across
  // genders in first-seen order.
  std::vector<std::string> Vocabulary(BinnedAttribute attribute) const;

  // Hash of the boundaries and labels, independent of the version tag.
  std::string ContentDigest() const;

  bool operator==(const BinningConfig&) const = default;

 private:
  std::string version_;
  std::map<std::string, BinSpec, std::less<>> specs_;
};

inline constexpr std::string_view kDefaultBinningVersion = "default-v1";

// Measurement values grouped for fitting.
struct AttributeSamples {
  std::array<std::vector<double>, 3> f0_mean_by_gender;  // indexed by Gender
  std::vector<double> f0_std;
  std::vector<double> c50;
  std::vector<double> snr;
  std::vector<double> rate;
  std::vector<double> quality;

  void Add(const AcousticAttributes& attributes, Gender gender);
  const std::vector<double>& ForKey(std::string_view key) const;
};

struct FitOptions {
  // Quantiles per bin key; absent keys use k / n for the default label count.
  std::map<std::string, std::vector<double>, std::less<>> quantiles;
  std::size_t min_samples = 100;
};

struct FitResult {
  BinningConfig config;
  // "fit_fallback:<key>:<reason>" for every key that kept its default table.
  std::vector<std::string> flags;
};

FitResult FitBins(const AttributeSamples& samples,
                  const FitOptions& options = {});

// Maps measurements to labels and copies the categorical metadata. Undefined
// measurements take the neutral label and are listed in labels.flagged.
AttributeLabels BinAttributes(const AcousticAttributes& attributes,
                              const SpeakerMetadata& speaker,
                              const StyleMetadata& style,
                              const BinningConfig& config);

// gender, pitch, pitch variation, reverb, snr, rate, quality, style.
std::vector<std::string> LabelsToTokens(const AttributeLabels& labels);
std::string LabelsToSequence(const AttributeLabels& labels);

// Throws ConfigError naming both versions when they differ.
void RequireSameVersion(std::string_view expected, std::string_view actual);

}  // namespace speechdesc

#endif  // SPEECHDESC_BINNING_BINNING_H_
