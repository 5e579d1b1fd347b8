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

#include "speechdesc/attributes/snr.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace speechdesc {
namespace {

// G = log E|x| - E log|x| of speech-plus-noise under the WADA model.
// Generated by tools/gen_wada_table.py.
constexpr double kWadaFirstDb = -20.0;
constexpr std::array<double, 121> kWadaTable = {
    0.409435, 0.409459, 0.409498, 0.409556,
    0.409644, 0.409777, 0.409974, 0.410265,
    0.410687, 0.411293, 0.412148, 0.413339,
    0.414969, 0.417164, 0.420066, 0.423839,
    0.428654, 0.434691, 0.442128, 0.451128,
    0.461837, 0.474368, 0.488795, 0.505151,
    0.523423, 0.543551, 0.565434, 0.588934,
    0.613881, 0.640087, 0.667346, 0.695450,
    0.724190, 0.753365, 0.782784, 0.812271,
    0.841670, 0.870838, 0.899653, 0.928011,
    0.955824, 0.983019, 1.009539, 1.035339,
    1.060386, 1.084656, 1.108133, 1.130811,
    1.152689, 1.173770, 1.194063, 1.213579,
    1.232334, 1.250344, 1.267628, 1.284206,
    1.300100, 1.315330, 1.329920, 1.343890,
    1.357264, 1.370063, 1.382310, 1.394025,
    1.405229, 1.415944, 1.426188, 1.435982,
    1.445344, 1.454291, 1.462843, 1.471015,
    1.478824, 1.486285, 1.493413, 1.500224,
    1.506731, 1.512946, 1.518884, 1.524556,
    1.529974, 1.535149, 1.540092, 1.544814,
    1.549323, 1.553631, 1.557744, 1.561673,
    1.565426, 1.569010, 1.572433, 1.575702,
    1.578824, 1.581806, 1.584654, 1.587373,
    1.589970, 1.592451, 1.594820, 1.597082,
    1.599243, 1.601306, 1.603277, 1.605159,
    1.606956, 1.608672, 1.610311, 1.611877,
    1.613372, 1.614799, 1.616163, 1.617465,
    1.618708, 1.619896, 1.621030, 1.622113,
    1.623147, 1.624135, 1.625078, 1.625979,
    1.626839,
};

}  // namespace

double WadaSnr(std::span<const float> samples) {
  constexpr double kEps = 1e-10;
  double mean_abs = 0.0;
  double mean_log = 0.0;
  for (float s : samples) {
    const double a = std::max(static_cast<double>(std::abs(s)), kEps);
    mean_abs += a;
    mean_log += std::log(a);
  }
  const double n = static_cast<double>(std::max<std::size_t>(samples.size(), 1));
  const double g = std::log(mean_abs / n) - mean_log / n;
  if (g <= kWadaTable.front()) return kWadaFirstDb;
  if (g >= kWadaTable.back()) return kWadaFirstDb + kWadaTable.size() - 1;
  const auto it = std::upper_bound(kWadaTable.begin(), kWadaTable.end(), g);
  const auto hi = static_cast<std::size_t>(it - kWadaTable.begin());
  const std::size_t lo = hi - 1;
  const double frac = (g - kWadaTable[lo]) / (kWadaTable[hi] - kWadaTable[lo]);
  return kWadaFirstDb + static_cast<double>(lo) + frac;
}

std::optional<double> EstimateSnr(const AudioClip& clip, const SpeechMask& mask,
                                  const SnrOptions& options) {
  const std::size_t frames = mask.frames.size();
  const std::size_t speech = mask.SpeechFrameCount();
  if (clip.empty() || speech == 0) return std::nullopt;

  const std::size_t noise_frames = frames - speech;
  if (static_cast<double>(noise_frames) <
      options.min_noise_fraction * static_cast<double>(frames)) {
    return std::clamp(WadaSnr(clip.samples), kMinSnrDb, kMaxSnrDb);
  }
  const std::vector<double> powers =
      FramePowers(clip.samples, clip.sample_rate_hz, mask.plan, {});
  double speech_power = 0.0;
  std::vector<double> noise;
  noise.reserve(noise_frames);
  for (std::size_t t = 0; t < frames; ++t) {
    if (mask.frames[t]) {
      speech_power += powers[t];
    } else {
      noise.push_back(powers[t]);
    }
  }
  speech_power /= static_cast<double>(speech);
  // Median: frames at speech edges leak onset energy into the non-speech set.
  const double noise_power = Quantile(std::move(noise), 0.5);
  const double signal_power = speech_power - noise_power;
  if (noise_power <= 0.0 || signal_power / noise_power > 1e6) return kMaxSnrDb;
  if (signal_power <= 0.0) return kMinSnrDb;
  return std::clamp(10.0 * std::log10(signal_power / noise_power), kMinSnrDb,
                    kMaxSnrDb);
}

}  // namespace speechdesc
