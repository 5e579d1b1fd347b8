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

#include "speechdesc/attributes/frames.h"

#include <cmath>

#include "speechdesc/errors.h"

namespace speechdesc {

int FramePlan::FrameLength(int sample_rate_hz) const {
  return static_cast<int>(std::lround(frame_ms * sample_rate_hz / 1000.0));
}

int FramePlan::HopLength(int sample_rate_hz) const {
  return static_cast<int>(std::lround(hop_ms * sample_rate_hz / 1000.0));
}

std::size_t FramePlan::FrameCount(std::size_t num_samples,
                                  int sample_rate_hz) const {
  if (!(frame_ms > hop_ms && hop_ms > 0.0)) {
    throw ConfigError("frame plan requires frame_ms > hop_ms > 0");
  }
  if (num_samples == 0) return 0;
  const auto frame = static_cast<std::size_t>(FrameLength(sample_rate_hz));
  const auto hop = static_cast<std::size_t>(HopLength(sample_rate_hz));
  if (num_samples <= frame) return 1;
  return 1 + (num_samples - frame) / hop;
}

std::vector<double> HannWindow(int length) {
  std::vector<double> window(length);
  for (int i = 0; i < length; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / length);
  }
  return window;
}

std::vector<double> FramePowers(std::span<const float> samples,
                                int sample_rate_hz, const FramePlan& plan,
                                std::span<const double> window) {
  const std::size_t count = plan.FrameCount(samples.size(), sample_rate_hz);
  const auto frame = static_cast<std::size_t>(plan.FrameLength(sample_rate_hz));
  const auto hop = static_cast<std::size_t>(plan.HopLength(sample_rate_hz));
  double window_power = 0.0;
  for (double w : window) window_power += w * w;
  std::vector<double> powers(count);
  for (std::size_t f = 0; f < count; ++f) {
    const std::size_t start = f * hop;
    double acc = 0.0;
    for (std::size_t i = 0; i < frame; ++i) {
      const std::size_t idx = start + i;
      const double x = idx < samples.size() ? samples[idx] : 0.0;
      const double w = window.empty() ? 1.0 : window[i];
      acc += (w * x) * (w * x);
    }
    powers[f] = acc / (window.empty() ? static_cast<double>(frame) : window_power);
  }
  return powers;
}

}  // namespace speechdesc
