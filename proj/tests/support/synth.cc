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

#include "synth.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <random>

#include <unsupported/Eigen/FFT>

#include "speechdesc/corpus/manifest.h"
#include "speechdesc/corpus/wav.h"

namespace speechdesc::testing {
namespace {

// RBJ biquad, direct form I.
struct Biquad {
  double b0, b1, b2, a1, a2;
  double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  double Step(double x) {
    const double y = b0 * x + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
    x2 = x1;
    x1 = x;
    y2 = y1;
    y1 = y;
    return y;
  }
};

Biquad Design(bool highpass, double freq, int rate) {
  const double w0 = 2.0 * M_PI * freq / rate;
  const double alpha = std::sin(w0) / (2.0 * M_SQRT1_2);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  Biquad q{};
  if (highpass) {
    q.b0 = (1.0 + c) / 2.0 / a0;
    q.b1 = -(1.0 + c) / a0;
  } else {
    q.b0 = (1.0 - c) / 2.0 / a0;
    q.b1 = (1.0 - c) / a0;
  }
  q.b2 = q.b0;
  q.a1 = -2.0 * c / a0;
  q.a2 = (1.0 - alpha) / a0;
  return q;
}

std::size_t Samples(double seconds, int rate) {
  return static_cast<std::size_t>(std::llround(seconds * rate));
}

}  // namespace

std::vector<float> Sine(double freq_hz, double seconds, double amplitude,
                        int rate) {
  std::vector<float> out(Samples(seconds, rate));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<float>(amplitude * std::sin(2.0 * M_PI * freq_hz * i / rate));
  }
  return out;
}

std::vector<float> Sawtooth(double freq_hz, double seconds, double amplitude,
                            int rate) {
  std::vector<float> out(Samples(seconds, rate));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double phase = std::fmod(freq_hz * i / rate, 1.0);
    out[i] = static_cast<float>(amplitude * (2.0 * phase - 1.0));
  }
  return out;
}

std::vector<float> WhiteNoise(double seconds, double rms, std::uint64_t seed,
                              int rate) {
  std::mt19937_64 rng(seed);
  std::vector<float> out(Samples(seconds, rate));
  for (float& s : out) {
    // Box-Muller on raw engine output keeps results library-independent.
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    s = static_cast<float>(rms * std::sqrt(-2.0 * std::log(u1)) *
                           std::cos(2.0 * M_PI * u2));
  }
  return out;
}

std::vector<float> Silence(double seconds, int rate) {
  return std::vector<float>(Samples(seconds, rate), 0.0f);
}

std::vector<float> SpeechBandNoise(double seconds, double rms,
                                   std::uint64_t seed, int rate) {
  std::vector<float> x = WhiteNoise(seconds, 1.0, seed, rate);
  Biquad hp1 = Design(true, 300.0, rate), hp2 = Design(true, 300.0, rate);
  Biquad lp1 = Design(false, 3400.0, rate), lp2 = Design(false, 3400.0, rate);
  for (float& s : x) {
    s = static_cast<float>(lp2.Step(lp1.Step(hp2.Step(hp1.Step(s)))));
  }
  const double p = MeanPower(x);
  if (p > 0.0) Scale(x, rms / std::sqrt(p));
  return x;
}

std::vector<float> Concat(std::initializer_list<std::vector<float>> parts) {
  std::vector<float> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

double MeanPower(std::span<const float> x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (float s : x) acc += static_cast<double>(s) * s;
  return acc / static_cast<double>(x.size());
}

void Scale(std::vector<float>& x, double gain) {
  for (float& s : x) s = static_cast<float>(s * gain);
}

void AddInto(std::vector<float>& x, std::span<const float> y) {
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) x[i] += y[i];
}

std::vector<float> NoiseRir(double tau_s, double seconds, std::uint64_t seed,
                            int rate) {
  std::vector<float> h = WhiteNoise(seconds, 1.0, seed, rate);
  if (h.empty()) return h;
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] = static_cast<float>(h[i] * std::exp(-static_cast<double>(i) / (tau_s * rate)));
  }
  h[0] = 1.0f;
  return h;
}

std::vector<float> Convolve(std::span<const float> x, std::span<const float> h) {
  if (x.empty() || h.empty()) return {};
  const std::size_t out_len = x.size() + h.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;
  std::vector<double> xp(n, 0.0), hp(n, 0.0);
  std::copy(x.begin(), x.end(), xp.begin());
  std::copy(h.begin(), h.end(), hp.begin());
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> xf, hf;
  fft.fwd(xf, xp);
  fft.fwd(hf, hp);
  for (std::size_t i = 0; i < xf.size(); ++i) xf[i] *= hf[i];
  std::vector<double> y;
  fft.inv(y, xf);
  std::vector<float> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = static_cast<float>(y[i]);
  return out;
}

std::vector<float> Reverberate(std::span<const float> x, double tau_s,
                               std::uint64_t seed, int rate) {
  const std::vector<float> h = NoiseRir(tau_s, 6.0 * tau_s, seed, rate);
  std::vector<float> y = Convolve(x, h);
  const double px = MeanPower(x), py = MeanPower(y);
  if (py > 0.0) Scale(y, std::sqrt(px * static_cast<double>(x.size()) /
                                   (py * static_cast<double>(y.size()))));
  return y;
}

std::vector<float> SyntheticSpeech(std::span<const SyllableSpec> syllables,
                                   double gap_s, double amplitude, int rate) {
  constexpr double kRamp = 0.02;
  std::vector<float> out;
  for (std::size_t s = 0; s < syllables.size(); ++s) {
    const SyllableSpec& spec = syllables[s];
    const std::size_t n = Samples(spec.seconds, rate);
    const std::size_t ramp = Samples(kRamp, rate);
    int harmonics = std::max(1, static_cast<int>(4000.0 / spec.f0_hz));
    double norm = 0.0;
    for (int k = 1; k <= harmonics; ++k) norm += 1.0 / k;
    for (std::size_t i = 0; i < n; ++i) {
      double env = 1.0;
      if (i < ramp) env = 0.5 - 0.5 * std::cos(M_PI * i / ramp);
      if (n - 1 - i < ramp) env = 0.5 - 0.5 * std::cos(M_PI * (n - 1 - i) / ramp);
      double v = 0.0;
      for (int k = 1; k <= harmonics; ++k) {
        v += std::sin(2.0 * M_PI * k * spec.f0_hz * i / rate + 0.7 * k) / k;
      }
      out.push_back(static_cast<float>(amplitude * env * v / norm * 1.6));
    }
    if (s + 1 < syllables.size()) {
      out.insert(out.end(), Samples(gap_s, rate), 0.0f);
    }
  }
  return out;
}

AudioClip MakeClip(std::vector<float> samples, int rate) {
  AudioClip clip;
  clip.sample_rate_hz = rate;
  clip.samples = std::move(samples);
  return clip;
}

std::vector<SyntheticUtterance> SyntheticCorpus(int count, std::uint64_t seed,
                                                double utterance_s) {
  static const char* kLatinSyllables[] = {"ba", "ti", "ko", "mu", "se", "la"};
  static const char* kDevanagariWords[] = {"नमस्ते", "कमल", "भारत", "किताब"};
  static const double kSnrs[] = {5.0, 15.0, 25.0, 40.0, 1e9};
  static const double kTaus[] = {0.0, 0.03, 0.08, 0.15};

  std::vector<SyntheticUtterance> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
    auto uniform = [&rng](double lo, double hi) {
      return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    SyntheticUtterance u;
    char id[32];
    std::snprintf(id, sizeof(id), "utt%05d", i);
    u.utterance_id = id;
    u.gender = (rng() % 2 == 0) ? Gender::kFemale : Gender::kMale;
    u.style = static_cast<Style>(rng() % 7);
    const double base_f0 = u.gender == Gender::kFemale ? uniform(170.0, 270.0)
                                                       : uniform(85.0, 165.0);
    const double spread = (rng() % 2 == 0) ? 0.03 : 0.25;
    const int syllable_count = 3 + static_cast<int>(rng() % 4);
    const double syllable_s = uniform(0.12, 0.2);
    std::vector<SyllableSpec> syllables;
    for (int s = 0; s < syllable_count; ++s) {
      syllables.push_back({base_f0 * (s % 2 == 0 ? 1.0 + spread : 1.0 - spread),
                           syllable_s});
    }
    std::vector<float> speech = SyntheticSpeech(syllables, 0.12, 0.3);
    const double tau = kTaus[rng() % 4];
    if (tau > 0.0) {
      speech = Reverberate(speech, tau, rng());
    }
    std::vector<float> samples = Concat({Silence(0.2), speech});
    samples.resize(static_cast<std::size_t>(utterance_s * kRate), 0.0f);
    const double snr = kSnrs[rng() % 5];
    if (snr < 1e8) {
      const double speech_power = MeanPower(speech);
      std::vector<float> noise = WhiteNoise(
          utterance_s, std::sqrt(speech_power / std::pow(10.0, snr / 10.0)),
          rng());
      AddInto(samples, noise);
    }
    float peak = 0.0f;
    for (float s : samples) peak = std::max(peak, std::abs(s));
    if (peak > 0.99f) Scale(samples, 0.99 / peak);
    u.samples = std::move(samples);

    const bool hindi = rng() % 3 == 0;
    u.language = hindi ? "hin" : "eng";
    const int words = syllable_count;
    for (int w = 0; w < words; ++w) {
      if (!u.transcript.empty()) u.transcript += ' ';
      if (hindi) {
        u.transcript += kDevanagariWords[rng() % 4];
      } else {
        const int parts = 1 + static_cast<int>(rng() % 3);
        for (int p = 0; p < parts; ++p) u.transcript += kLatinSyllables[rng() % 6];
      }
    }
    if (rng() % 4 == 0) u.transcript += "!";
    corpus.push_back(std::move(u));
  }
  return corpus;
}

std::string WriteCorpus(const std::vector<SyntheticUtterance>& corpus,
                        const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string manifest = dir + "/manifest.jsonl";
  std::ofstream out(manifest, std::ios::trunc);
  static const char* kNames[] = {"Jaya", "Ravi", "Meera", "Arjun"};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SyntheticUtterance& u = corpus[i];
    WriteWav(dir + "/" + u.utterance_id + ".wav", MakeClip(u.samples));
    UtteranceRecord r;
    r.utterance_id = u.utterance_id;
    r.audio_ref = u.utterance_id + ".wav";
    r.transcript = u.transcript;
    r.language = u.language;
    r.speaker.speaker_id = "spk" + std::to_string(i % 7);
    if (i % 3 == 0) r.speaker.display_name = kNames[i % 4];
    r.speaker.gender = u.gender;
    r.style.style = u.style;
    if (i % 5 == 0) r.style.env_tags = {"street"};
    out << ToJsonLine(ToJson(r)) << '\n';
  }
  return manifest;
}

}  // namespace speechdesc::testing
