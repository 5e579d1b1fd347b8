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

#include "speechdesc/attributes/pitch.h"

#include <algorithm>
#include <cmath>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

// Returns the refined lag of the first dip below threshold, if any.
std::optional<double> YinLag(const float* x, int window, int min_lag,
                             int max_lag, double threshold,
                             std::vector<double>& diff) {
  diff.assign(max_lag + 2, 0.0);
  for (int lag = 1; lag <= max_lag + 1; ++lag) {
    double acc = 0.0;
    for (int j = 0; j < window; ++j) {
      const double d = static_cast<double>(x[j]) - x[j + lag];
      acc += d * d;
    }
    diff[lag] = acc;
  }
  // Cumulative mean normalization, in place.
  diff[0] = 1.0;
  double running = 0.0;
  for (int lag = 1; lag <= max_lag + 1; ++lag) {
    running += diff[lag];
    diff[lag] = running > 0.0 ? diff[lag] * lag / running : 1.0;
  }
  int lag = min_lag;
  while (lag <= max_lag && diff[lag] >= threshold) ++lag;
  if (lag > max_lag) return std::nullopt;
  while (lag + 1 <= max_lag && diff[lag + 1] < diff[lag]) ++lag;

  double refined = lag;
  const double a = diff[lag - 1], b = diff[lag], c = diff[lag + 1];
  const double denom = a - 2.0 * b + c;
  if (denom > 0.0) {
    const double shift = 0.5 * (a - c) / denom;
    if (std::abs(shift) < 1.0) refined += shift;
  }
  return refined;
}

}  // namespace

std::vector<std::optional<double>> TrackPitch(const AudioClip& clip,
                                              const FramePlan& plan,
                                              const PitchOptions& options) {
  if (!(options.min_f0_hz > 0.0 && options.max_f0_hz > options.min_f0_hz)) {
    throw ConfigError("pitch search range must satisfy 0 < min < max");
  }
  const int rate = clip.sample_rate_hz;
  const std::size_t frames = plan.FrameCount(clip.samples.size(), rate);
  std::vector<std::optional<double>> track(frames);
  const int window = plan.FrameLength(rate);
  const int hop = plan.HopLength(rate);
  const int min_lag = std::max(2, static_cast<int>(std::floor(rate / options.max_f0_hz)));
  int max_lag = static_cast<int>(std::ceil(rate / options.min_f0_hz));
  const auto n = static_cast<long long>(clip.samples.size());
  const long long needed_full = window + max_lag + 2;
  if (n < window + min_lag + 3) return track;
  if (n < needed_full) max_lag = static_cast<int>(n - window - 2);

  const long long span = window + max_lag + 2;
  std::vector<double> diff;
  for (std::size_t f = 0; f < frames; ++f) {
    long long start = static_cast<long long>(f) * hop;
    if (start + span > n) start = n - span;
    const float* x = clip.samples.data() + start;
    double energy = 0.0;
    for (int j = 0; j < window; ++j) energy += static_cast<double>(x[j]) * x[j];
    if (energy / window < 1e-10) continue;  // digital silence
    std::optional<double> lag =
        YinLag(x, window, min_lag, max_lag, options.threshold, diff);
    if (!lag) continue;
    const double f0 = rate / *lag;
    if (f0 >= options.min_f0_hz && f0 <= options.max_f0_hz) track[f] = f0;
  }
  return track;
}

F0Statistics EstimateF0(const AudioClip& clip, const SpeechMask& mask,
                        const PitchOptions& options) {
  F0Statistics stats;
  const std::vector<std::optional<double>> track =
      TrackPitch(clip, mask.plan, options);
  const std::size_t frames = std::min(track.size(), mask.frames.size());
  std::size_t speech = 0;
  std::vector<double> voiced;
  for (std::size_t t = 0; t < frames; ++t) {
    if (!mask.frames[t]) continue;
    ++speech;
    if (track[t]) voiced.push_back(*track[t]);
  }
  if (speech > 0) {
    stats.voiced_fraction = static_cast<double>(voiced.size()) / speech;
  }
  if (!voiced.empty()) {
    double mean = 0.0;
    for (double f0 : voiced) mean += f0;
    mean /= static_cast<double>(voiced.size());
    double var = 0.0;
    for (double f0 : voiced) var += (f0 - mean) * (f0 - mean);
    stats.mean_hz = mean;
    stats.std_hz = std::sqrt(var / static_cast<double>(voiced.size()));
  }
  return stats;
}

}  // namespace speechdesc
