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
#include <complex>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "speechdesc/corpus/languages.h"
#include "speechdesc/corpus/manifest.h"
#include "speechdesc/corpus/wav.h"
#include "support/synth.h"

namespace speechdesc {
namespace {

namespace fs = std::filesystem;
using testing::MakeClip;
using testing::Sine;

class CorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("speechdesc_corpus_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& content) {
    std::ofstream(dir_ / name, std::ios::binary) << content;
    return dir_ / name;
  }

  fs::path dir_;
};

TEST_F(CorpusTest, EmptyManifest) {
  const auto m = ReadManifest(Write("m.jsonl", ""));
  EXPECT_TRUE(m.records.empty());
  EXPECT_TRUE(m.skipped.empty());
}

TEST_F(CorpusTest, ManifestKeepsOrder) {
  const auto m = ReadManifest(Write("m.jsonl",
      R"({"utterance_id": "c", "audio_ref": "c.wav", "transcript": "x", "language": "eng"})" "\n"
      R"({"utterance_id": "a", "audio_ref": "a.wav", "transcript": "y", "language": "hin"})" "\n"
      R"({"utterance_id": "b", "audio_ref": "b.wav", "transcript": "z", "language": "tam"})" "\n"));
  ASSERT_EQ(m.records.size(), 3u);
  EXPECT_EQ(m.records[0].utterance_id, "c");
  EXPECT_EQ(m.records[1].utterance_id, "a");
  EXPECT_EQ(m.records[2].language, "tam");
}

TEST_F(CorpusTest, BadLineIsSkippedWithLineNumber) {
  const auto m = ReadManifest(Write("m.jsonl",
      R"({"utterance_id": "a", "audio_ref": "a.wav", "transcript": "x", "language": "eng"})" "\n"
      R"({"utterance_id": "b", "audio_ref": "b.wav", "language": "eng"})" "\n"
      R"({"utterance_id": "c", "audio_ref": "c.wav", "transcript": "z", "language": "eng"})" "\n"));
  EXPECT_EQ(m.records.size(), 2u);
  ASSERT_EQ(m.skipped.size(), 1u);
  EXPECT_EQ(m.skipped[0].line_number, 2u);
  EXPECT_NE(m.skipped[0].reason.find("transcript"), std::string::npos);
}

TEST_F(CorpusTest, UnsupportedLanguageIsSkipped) {
  const auto m = ReadManifest(Write("m.jsonl",
      R"({"utterance_id": "a", "audio_ref": "a.wav", "transcript": "x", "language": "xx"})" "\n"));
  EXPECT_TRUE(m.records.empty());
  EXPECT_EQ(m.skipped.size(), 1u);
}

TEST(Languages, TwentyFourPlusEnglish) {
  EXPECT_TRUE(IsSupportedLanguage("eng"));
  EXPECT_TRUE(IsSupportedLanguage("hin"));
  EXPECT_TRUE(IsSupportedLanguage("sat"));
  EXPECT_FALSE(IsSupportedLanguage("fra"));
  EXPECT_GE(SupportedLanguages().size(), 24u);
}

TEST_F(CorpusTest, SilenceLoadsAsZeros) {
  WriteWav(dir_ / "s.wav", AudioClip{16000, std::vector<float>(16000, 0.0f)});
  const AudioClip clip = LoadAudio(dir_ / "s.wav", 16000);
  ASSERT_EQ(clip.samples.size(), 16000u);
  for (float v : clip.samples) ASSERT_EQ(v, 0.0f);
}

TEST_F(CorpusTest, AntiphaseStereoDownmixesToZero) {
  std::vector<float> x = Sine(300, 0.5, 0.5);
  std::vector<float> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
  WriteWav(dir_ / "st.wav", {x, y}, 16000, WavEncoding::kFloat32);
  const AudioClip clip = LoadAudio(dir_ / "st.wav", 16000);
  for (float v : clip.samples) ASSERT_EQ(v, 0.0f);
}

TEST_F(CorpusTest, ResampledSineKeepsItsFrequency) {
  WriteWav(dir_ / "hi.wav", {Sine(440, 1.0, 0.5, 48000)}, 48000, WavEncoding::kFloat32);
  const AudioClip clip = LoadAudio(dir_ / "hi.wav", 16000);
  ASSERT_EQ(clip.samples.size(), 16000u);
  // Brute-force DFT peak search at 0.25 Hz resolution around the tone.
  double best_f = 0, best_p = -1;
  for (double f = 400; f <= 480; f += 0.25) {
    std::complex<double> acc = 0;
    for (std::size_t n = 0; n < clip.samples.size(); ++n) {
      acc += static_cast<double>(clip.samples[n]) * std::polar(1.0, -2 * M_PI * f * n / 16000.0);
    }
    if (std::norm(acc) > best_p) {
      best_p = std::norm(acc);
      best_f = f;
    }
  }
  EXPECT_NEAR(best_f, 440.0, 1.0);
}

TEST_F(CorpusTest, Pcm16RoundTripWithinQuantization) {
  const std::vector<float> x = Sine(200, 0.2, 0.7);
  WriteWav(dir_ / "p.wav", MakeClip(x));
  const WavData w = ReadWav(dir_ / "p.wav");
  ASSERT_EQ(w.channels, 1);
  ASSERT_EQ(w.channel_samples[0].size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) ASSERT_NEAR(w.channel_samples[0][i], x[i], 1.0 / 32768);
}

TEST_F(CorpusTest, CorruptWavThrows) {
  Write("bad.wav", "RIFF\x10\0\0\0WAVEjunk");
  EXPECT_THROW(LoadAudio(dir_ / "bad.wav", 16000), DecodeError);
  EXPECT_THROW(LoadAudio(dir_ / "missing.wav", 16000), Error);
}

AnnotatedRecord SampleRecord(int i) {
  AnnotatedRecord r;
  r.record.utterance_id = "u" + std::to_string(i);
  r.record.audio_ref = r.record.utterance_id + ".wav";
  r.record.transcript = i == 2 ? "line one\nline \"two\"\ttab" : "plain text";
  r.record.language = i % 2 ? "hin" : "eng";
  r.record.speaker.speaker_id = "s";
  r.record.speaker.display_name = "Jaya";
  r.record.speaker.gender = Gender::kFemale;
  r.record.style.style = Style::kAnger;
  r.record.style.env_tags = {"street"};
  r.record.duration_s = 1.25 + i;
  r.attributes.f0_mean_hz = 200.123456789 + i;
  r.attributes.snr_db = 12.5;
  r.attributes.flags = {"c50_undefined"};
  r.labels.label(BinnedAttribute::kPitch) = "high pitch";
  r.labels.gender = Gender::kFemale;
  r.labels.config_version = "default-v1";
  r.captions.descriptive = "A woman speaks.";
  r.captions.rng_seed = 1234567890123ULL + i;
  r.captions.native = NativeCaption{"नमस्ते", "hin", true};
  return r;
}

TEST_F(CorpusTest, AnnotatedRoundTrip) {
  std::vector<AnnotatedRecord> records;
  for (int i = 0; i < 5; ++i) records.push_back(SampleRecord(i));
  WriteAnnotatedManifest(records, dir_ / "out.jsonl");
  std::ifstream in(dir_ / "out.jsonl");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 5);  // the embedded newline is escaped
  const auto back = ReadAnnotatedManifest(dir_ / "out.jsonl");
  ASSERT_EQ(back.records.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(back.records[i], records[i]) << i;
}

TEST_F(CorpusTest, EmptyAnnotatedManifest) {
  WriteAnnotatedManifest({}, dir_ / "empty.jsonl");
  EXPECT_EQ(fs::file_size(dir_ / "empty.jsonl"), 0u);
}

}  // namespace
}  // namespace speechdesc
