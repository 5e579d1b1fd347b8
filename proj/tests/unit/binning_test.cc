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

#include <algorithm>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "speechdesc/binning/binning.h"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

AcousticAttributes JayaAttributes() {
  AcousticAttributes a;
  a.f0_mean_hz = 235.0;
  a.f0_std_hz = 40.0;
  a.c50_db = 42.0;
  a.snr_db = 40.0;
  a.speaking_rate_sps = 5.5;
  a.quality_score = 4.3;
  return a;
}

TEST(BinSpec, BoundaryGoesUp) {
  const BinningConfig config = BinningConfig::Default();
  const BinSpec& female = config.spec(BinnedAttribute::kPitch, Gender::kFemale);
  const double b = female.boundaries[3];
  EXPECT_EQ(female.LabelFor(b), "very high pitch");
  EXPECT_EQ(female.LabelFor(std::nextafter(b, 0.0)), "high pitch");
}

TEST(BinSpec, GenderConditioned) {
  const BinningConfig config = BinningConfig::Default();
  EXPECT_NE(config.spec(BinnedAttribute::kPitch, Gender::kMale).LabelFor(150.0),
            config.spec(BinnedAttribute::kPitch, Gender::kFemale).LabelFor(150.0));
}

TEST(BinAttributes, JayaFixture) {
  SpeakerMetadata speaker;
  speaker.speaker_id = "s1";
  speaker.display_name = "Jaya";
  speaker.gender = Gender::kFemale;
  StyleMetadata style;
  style.style = Style::kAnger;
  const AttributeLabels labels =
      BinAttributes(JayaAttributes(), speaker, style, BinningConfig::Default());
  EXPECT_EQ(labels.label(BinnedAttribute::kPitch), "high pitch");
  EXPECT_EQ(labels.label(BinnedAttribute::kPitchVariation), "expressive tone");
  EXPECT_EQ(labels.label(BinnedAttribute::kReverb), "slightly close sounding");
  EXPECT_EQ(labels.label(BinnedAttribute::kSnr), "clear");
  EXPECT_EQ(labels.label(BinnedAttribute::kRate), "slightly fast pace");
  EXPECT_EQ(labels.label(BinnedAttribute::kQuality), "great speech quality");
  EXPECT_EQ(labels.speaker_name, "Jaya");
  EXPECT_TRUE(labels.flagged.empty());
  EXPECT_EQ(LabelsToSequence(labels),
            "female, high pitch, expressive tone, slightly close sounding, clear, "
            "slightly fast pace, great speech quality, anger");
}

TEST(BinAttributes, UndefinedUsesNeutralAndFlags) {
  AcousticAttributes a = JayaAttributes();
  a.c50_db.reset();
  const BinningConfig config = BinningConfig::Default();
  const AttributeLabels labels = BinAttributes(a, {}, {}, config);
  EXPECT_EQ(labels.label(BinnedAttribute::kReverb), config.spec("reverb").neutral_label());
  EXPECT_EQ(labels.flagged, std::vector<std::string>{"reverb"});
}

TEST(Sequence, Canonical) {
  AttributeLabels a;
  a.style = Style::kSad;
  a.gender = Gender::kMale;
  for (BinnedAttribute attr : kAllBinnedAttributes) a.label(attr) = std::string(ToString(attr)) + " x";
  AttributeLabels b;
  for (auto it = kAllBinnedAttributes.rbegin(); it != kAllBinnedAttributes.rend(); ++it) {
    b.label(*it) = std::string(ToString(*it)) + " x";
  }
  b.gender = Gender::kMale;
  b.style = Style::kSad;
  EXPECT_EQ(LabelsToSequence(a), LabelsToSequence(b));
  EXPECT_EQ(LabelsToTokens(a).size(), 8u);
}

TEST(FitBins, UniformQuantiles) {
  AttributeSamples samples;
  for (int i = 0; i <= 100000; ++i) samples.c50.push_back(i / 1000.0);
  FitOptions options;
  options.quantiles["reverb"] = {0.2, 0.4, 0.6, 0.8};
  const FitResult fit = FitBins(samples, options);
  const auto& b = fit.config.spec("reverb").boundaries;
  ASSERT_EQ(b.size(), 4u);
  EXPECT_NEAR(b[0], 20.0, 1e-9);
  EXPECT_NEAR(b[1], 40.0, 1e-9);
  EXPECT_NEAR(b[2], 60.0, 1e-9);
  EXPECT_NEAR(b[3], 80.0, 1e-9);
  EXPECT_NE(fit.config.version(), std::string(kDefaultBinningVersion));
}

TEST(FitBins, DegenerateFallsBack) {
  AttributeSamples samples;
  samples.snr.assign(500, 12.0);
  const FitResult fit = FitBins(samples);
  EXPECT_EQ(fit.config.spec("snr"), BinningConfig::Default().spec("snr"));
  EXPECT_NE(std::find(fit.flags.begin(), fit.flags.end(),
                      "fit_fallback:snr:degenerate_boundaries"),
            fit.flags.end());
}

TEST(FitBins, SelfConsistentHistogram) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> rate(4.5, 1.0);
  AttributeSamples samples;
  for (int i = 0; i < 1000; ++i) samples.rate.push_back(rate(rng));
  const FitResult fit = FitBins(samples);
  const BinSpec& spec = fit.config.spec("rate");
  std::vector<int> counts(spec.labels.size(), 0);
  for (double v : samples.rate) ++counts[spec.BinIndex(v)];
  for (int c : counts) EXPECT_NEAR(c / 1000.0, 1.0 / spec.labels.size(), 0.02);
}

TEST(FitBins, WrongQuantileCountIsAConfigError) {
  AttributeSamples samples;
  for (int i = 0; i < 200; ++i) samples.rate.push_back(i);
  FitOptions options;
  options.quantiles["rate"] = {0.5};
  EXPECT_THROW(FitBins(samples, options), ConfigError);
}

TEST(BinningConfig, JsonRoundTripAndValidation) {
  const BinningConfig config = BinningConfig::Default();
  EXPECT_EQ(BinningConfig::FromJson(config.ToJson()), config);
  auto j = config.ToJson();
  j["attributes"]["snr"]["boundaries"] = {30.0, 5.0, 15.0, 50.0};
  EXPECT_THROW(BinningConfig::FromJson(j).Validate(), ConfigError);
  j = config.ToJson();
  j["attributes"].erase("rate");
  EXPECT_THROW(BinningConfig::FromJson(j).Validate(), ConfigError);
}

TEST(BinningConfig, VersionMismatchIsRefused) {
  EXPECT_THROW(RequireSameVersion("default-v1", "fit-abc"), ConfigError);
  EXPECT_NO_THROW(RequireSameVersion("default-v1", "default-v1"));
}

}  // namespace
}  // namespace speechdesc
