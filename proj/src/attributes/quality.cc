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

#include "speechdesc/attributes/quality.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace speechdesc {
namespace {

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double QualityModel::Score(double snr_db, std::optional<double> c50_db,
                           double flatness) const {
  const double penalty =
      std::clamp((flatness - flatness_onset) / flatness_span, 0.0, 1.0);
  const double blend = Logistic(snr_slope * (snr_db - snr_midpoint_db)) *
                       (c50_db ? Logistic(c50_slope * (*c50_db - c50_midpoint_db)) : 1.0) *
                       (1.0 - flatness_weight * penalty);
  return std::clamp(kMinQuality + (kMaxQuality - kMinQuality) * blend,
                    kMinQuality, kMaxQuality);
}

double SpectralFlatness(const AudioClip& clip, const SpeechMask& mask) {
  constexpr int kFftSize = 512;
  const int rate = clip.sample_rate_hz;
  const int frame = mask.plan.FrameLength(rate);
  const int hop = mask.plan.HopLength(rate);
  if (clip.empty() || frame > kFftSize) return 0.0;
  const std::vector<double> window = HannWindow(frame);
  const std::size_t frames = mask.plan.FrameCount(clip.samples.size(), rate);
  const bool any_speech = mask.SpeechFrameCount() > 0;

  Eigen::FFT<double> fft;
  std::vector<double> buffer(kFftSize);
  std::vector<std::complex<double>> spectrum;
  std::vector<double> average(kFftSize / 2 + 1, 0.0);
  std::size_t used = 0;
  for (std::size_t f = 0; f < frames; ++f) {
    if (any_speech && (f >= mask.frames.size() || !mask.frames[f])) continue;
    std::fill(buffer.begin(), buffer.end(), 0.0);
    const std::size_t start = f * hop;
    for (int i = 0; i < frame; ++i) {
      const std::size_t idx = start + i;
      if (idx < clip.samples.size()) buffer[i] = window[i] * clip.samples[idx];
    }
    fft.fwd(spectrum, buffer);
    for (std::size_t k = 0; k < average.size(); ++k) average[k] += std::norm(spectrum[k]);
    ++used;
  }
  if (used == 0) return 0.0;
  const auto lo = static_cast<std::size_t>(std::ceil(100.0 * kFftSize / rate));
  const auto hi = std::min(average.size() - 1,
                           static_cast<std::size_t>(std::floor(4000.0 * kFftSize / rate)));
  double log_sum = 0.0, sum = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) {
    const double p = average[k] / static_cast<double>(used) + 1e-20;
    log_sum += std::log(p);
    sum += p;
  }
  const double bins = static_cast<double>(hi - lo + 1);
  return std::exp(log_sum / bins) / (sum / bins);
}

std::optional<double> EstimateQuality(const AudioClip& clip,
                                      const SpeechMask& mask,
                                      std::optional<double> snr_db,
                                      std::optional<double> c50_db,
                                      const QualityModel& model) {
  if (!snr_db) return std::nullopt;
  return model.Score(*snr_db, c50_db, SpectralFlatness(clip, mask));
}

}  // namespace speechdesc
