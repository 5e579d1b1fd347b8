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

#include <cmath>

#include <gtest/gtest.h>

#include "speechdesc/attributes/annotate.h"
#include "speechdesc/attributes/syllables.h"
#include "support/oracles.h"
#include "support/synth.h"

namespace speechdesc {
namespace {

using namespace testing;

TEST(Vad, ZerosAreNotSpeech) {
  const SpeechMask m = DetectSpeech(MakeClip(Silence(1.0)));
  EXPECT_EQ(m.SpeechFrameCount(), 0u);
  EXPECT_EQ(m.speech_duration_s, 0.0);
}

TEST(Vad, BurstExtent) {
  std::vector<float> x = Concat({Silence(0.5), SpeechBandNoise(1.0, 0.1, 1), Silence(0.5)});
  AddInto(x, WhiteNoise(2.0, 0.01, 2));  // floor 20 dB below the burst
  const SpeechMask m = DetectSpeech(MakeClip(x));
  EXPECT_GE(m.speech_duration_s, 0.8);
  EXPECT_LE(m.speech_duration_s, 1.2);
}

TEST(Vad, ConstantToneIsAllSpeech) {
  const SpeechMask m = DetectSpeech(MakeClip(Sine(300, 1.0, 0.99)));
  EXPECT_EQ(m.SpeechFrameCount(), m.size());
}

TEST(Pitch, Sine220) {
  const AudioClip clip = MakeClip(Sine(220, 3.0));
  const F0Statistics f0 = EstimateF0(clip, DetectSpeech(clip));
  ASSERT_TRUE(f0.mean_hz);
  EXPECT_NEAR(*f0.mean_hz, 220.0, 3.0);
  EXPECT_LT(*f0.std_hz, 5.0);
  EXPECT_GT(f0.voiced_fraction, 0.9);
}

TEST(Pitch, WhiteNoiseIsUnvoiced) {
  const AudioClip clip = MakeClip(WhiteNoise(2.0, 0.2, 3));
  EXPECT_FALSE(EstimateF0(clip, DetectSpeech(clip)).mean_hz);
}

TEST(Pitch, TwoValuedTrack) {
  const AudioClip clip = MakeClip(Concat({Sawtooth(110, 1.0), Sawtooth(220, 1.0)}));
  const F0Statistics f0 = EstimateF0(clip, DetectSpeech(clip));
  ASSERT_TRUE(f0.mean_hz);
  EXPECT_GE(*f0.mean_hz, 155.0);
  EXPECT_LE(*f0.mean_hz, 175.0);
  EXPECT_GE(*f0.std_hz, 50.0);
  EXPECT_LE(*f0.std_hz, 60.0);
}

TEST(Snr, DigitalSilenceGapsClampHigh) {
  std::vector<SyllableSpec> s(4, {180, 0.2});
  const AudioClip clip = MakeClip(Concat({Silence(0.3), SyntheticSpeech(s, 0.3), Silence(0.3)}));
  EXPECT_EQ(EstimateSnr(clip, DetectSpeech(clip)), kMaxSnrDb);
}

TEST(Snr, TenDecibelMixture) {
  const std::vector<float> burst = SpeechBandNoise(1.5, 0.1, 4);
  std::vector<float> x = Concat({Silence(0.7), burst, Silence(0.7)});
  AddInto(x, WhiteNoise(x.size() / double(kRate), std::sqrt(MeanPower(burst) / 10.0), 5));
  const AudioClip clip = MakeClip(x);
  const auto est = EstimateSnr(clip, DetectSpeech(clip));
  ASSERT_TRUE(est);
  EXPECT_GE(*est, 7.0);
  EXPECT_LE(*est, 13.0);
}

TEST(Snr, NoSpeechIsUndefined) {
  const AudioClip clip = MakeClip(Silence(1.0));
  EXPECT_FALSE(EstimateSnr(clip, DetectSpeech(clip)));
}

TEST(C50, SingleImpulse) {
  std::vector<float> h(8000, 0.0f);
  h[10] = 1.0f;
  EXPECT_EQ(C50FromRir(h, kRate), kMaxC50Db);
}

TEST(C50, EqualEarlyAndLate) {
  std::vector<float> h(1600, 0.0f);
  h[0] = 1.0f;
  h[800] = 1.0f;  // exactly 50 ms after onset
  EXPECT_NEAR(C50FromRir(h, kRate), 0.0, 1e-12);
}

TEST(C50, DecayMatchesBruteForce) {
  std::vector<float> h(16000);
  for (std::size_t n = 0; n < h.size(); ++n) h[n] = std::exp(-double(n) / (0.03 * kRate));
  EXPECT_NEAR(C50FromRir(h, kRate), OracleC50(h, kRate), 1e-9);
}

TEST(C50, BlindDryIsHighAndReverbLowersIt) {
  std::vector<SyllableSpec> s(6, {170, 0.2});
  const std::vector<float> dry = SyntheticSpeech(s, 0.7);
  const AudioClip dry_clip = MakeClip(Concat({Silence(0.3), dry, Silence(0.8)}));
  const auto dry_est = EstimateC50Blind(dry_clip, DetectSpeech(dry_clip));
  const AudioClip wet_clip =
      MakeClip(Concat({Silence(0.3), Reverberate(dry, 0.1, 9), Silence(0.8)}));
  const auto wet_est = EstimateC50Blind(wet_clip, DetectSpeech(wet_clip));
  ASSERT_TRUE(dry_est);
  ASSERT_TRUE(wet_est);
  EXPECT_GE(*dry_est, 20.0);
  EXPECT_LE(*wet_est, *dry_est - 10.0);
}

TEST(C50, BlindSilenceUndefined) {
  const AudioClip clip = MakeClip(Silence(1.0));
  EXPECT_FALSE(EstimateC50Blind(clip, DetectSpeech(clip)));
}

TEST(Rate, Arithmetic) {
  // 12 vowel nuclei.
  EXPECT_DOUBLE_EQ(*SpeakingRate("banana banana banana banana", "eng", 4.0), 3.0);
}

TEST(Rate, Devanagari) { EXPECT_EQ(CountSyllables("नमस्ते", "hin"), 3); }

TEST(Rate, OtherScripts) {
  EXPECT_EQ(CountSyllables("বাংলা", "ben"), 2);  // বাং লা
  EXPECT_EQ(CountSyllables("தமிழ்", "tam"), 2);  // த மி ழ்
  EXPECT_EQ(CountSyllables("کتاب", "urd"), 2);   // ki-taab
}

TEST(Rate, EmptyMaskIsUndefined) { EXPECT_FALSE(SpeakingRate("banana", "eng", 0.0)); }

TEST(Rate, NormalizationInvariant) {
  // Decomposed and precomposed forms count alike.
  EXPECT_EQ(CountSyllables("café", "eng"), CountSyllables("café", "eng"));
}

TEST(Quality, Calibration) {
  const QualityModel model;
  EXPECT_GE(model.Score(60, 60, 0.05), 4.0);
  EXPECT_LE(model.Score(0, 60, 0.05), 2.0);
  double previous = 0;
  for (double snr = -10; snr <= 60; snr += 0.5) {
    const double s = model.Score(snr, 20, 0.1);
    EXPECT_GE(s, previous);
    previous = s;
  }
}

TEST(Annotate, ComposedFixture) {
  std::vector<SyllableSpec> s;
  for (int i = 0; i < 6; ++i) s.push_back({200, 0.2});
  const std::vector<float> speech = Reverberate(SyntheticSpeech(s, 0.7), 0.05, 4);
  std::vector<float> x = Concat({Silence(0.5), speech, Silence(0.8)});
  const double speech_power = MeanPower(SyntheticSpeech(s, 0.0));
  AddInto(x, WhiteNoise(x.size() / double(kRate), std::sqrt(speech_power / 1000.0), 6));
  UtteranceRecord r;
  r.transcript = "ba ba ba ba ba ba";
  r.language = "eng";
  const AudioClip clip = MakeClip(x);
  const AcousticAttributes a = Annotate(r, clip);
  ASSERT_TRUE(a.f0_mean_hz);
  EXPECT_NEAR(*a.f0_mean_hz, 200.0, 3.0);
  EXPECT_LT(*a.f0_std_hz, 5.0);
  ASSERT_TRUE(a.snr_db);
  EXPECT_GT(*a.snr_db, 15.0);
  ASSERT_TRUE(a.c50_db);
  EXPECT_LT(*a.c50_db, 20.0);
  ASSERT_TRUE(a.speaking_rate_sps);
  EXPECT_NEAR(*a.speaking_rate_sps, 6 / a.speech_duration_s, 1e-12);
  ASSERT_TRUE(a.quality_score);
  EXPECT_EQ(Annotate(r, clip), a);  // deterministic
}

TEST(Annotate, SilenceFlagsEverything) {
  UtteranceRecord r;
  r.transcript = "hello";
  r.language = "eng";
  const AcousticAttributes a = Annotate(r, MakeClip(Silence(1.0)));
  EXPECT_FALSE(a.f0_mean_hz);
  EXPECT_FALSE(a.snr_db);
  EXPECT_FALSE(a.c50_db);
  EXPECT_FALSE(a.speaking_rate_sps);
  EXPECT_FALSE(a.quality_score);
  EXPECT_NE(std::find(a.flags.begin(), a.flags.end(), kFlagNoSpeech), a.flags.end());
}

}  // namespace
}  // namespace speechdesc
