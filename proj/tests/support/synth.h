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

#ifndef SPEECHDESC_TESTS_SUPPORT_SYNTH_H_
#define SPEECHDESC_TESTS_SUPPORT_SYNTH_H_

// Deterministic signal generators for tests and fixture corpora.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "speechdesc/types.h"

namespace speechdesc::testing {

constexpr int kRate = 16000;

std::vector<float> Sine(double freq_hz, double seconds, double amplitude = 0.5,
                        int rate = kRate);
std::vector<float> Sawtooth(double freq_hz, double seconds,
                            double amplitude = 0.5, int rate = kRate);
std::vector<float> WhiteNoise(double seconds, double rms, std::uint64_t seed,
                              int rate = kRate);
std::vector<float> Silence(double seconds, int rate = kRate);

// Noise band-limited to roughly 300-3400 Hz, unit RMS before scaling.
std::vector<float> SpeechBandNoise(double seconds, double rms,
                                   std::uint64_t seed, int rate = kRate);

std::vector<float> Concat(std::initializer_list<std::vector<float>> parts);
double MeanPower(std::span<const float> x);
void Scale(std::vector<float>& x, double gain);
// x += y (y may be shorter).
void AddInto(std::vector<float>& x, std::span<const float> y);

// Exponentially decaying Gaussian noise, h[n] = g[n] exp(-n / (tau * rate)),
// with a unit direct path at n = 0.
std::vector<float> NoiseRir(double tau_s, double seconds, std::uint64_t seed,
                            int rate = kRate);
// Full linear convolution, length x.size() + h.size() - 1.
std::vector<float> Convolve(std::span<const float> x, std::span<const float> h);
// Convolves with a NoiseRir of length 6 tau and rescales to the input power.
std::vector<float> Reverberate(std::span<const float> x, double tau_s,
                               std::uint64_t seed, int rate = kRate);

struct SyllableSpec {
  double f0_hz = 200.0;
  double seconds = 0.16;
};

// Harmonic "syllables" with raised-cosine ramps separated by gaps. A stand-in
// for dry voiced speech with clean offsets.
std::vector<float> SyntheticSpeech(std::span<const SyllableSpec> syllables,
                                   double gap_s, double amplitude = 0.3,
                                   int rate = kRate);

AudioClip MakeClip(std::vector<float> samples, int rate = kRate);

// One utterance of a synthetic corpus, with controllable attributes.
struct SyntheticUtterance {
  std::string utterance_id;
  std::string language = "eng";
  std::string transcript;
  Gender gender = Gender::kFemale;
  Style style = Style::kNeutral;
  std::vector<float> samples;
};

// Varied corpus: F0, F0 spread, noise level, reverberation and rate differ
// per item. Deterministic in (count, seed).
std::vector<SyntheticUtterance> SyntheticCorpus(int count, std::uint64_t seed,
                                                double utterance_s = 1.6);

// Writes <dir>/<id>.wav plus <dir>/manifest.jsonl; returns the manifest path.
std::string WriteCorpus(const std::vector<SyntheticUtterance>& corpus,
                        const std::string& dir);

}  // namespace speechdesc::testing

#endif  // SPEECHDESC_TESTS_SUPPORT_SYNTH_H_
