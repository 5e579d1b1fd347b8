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

#include "speechdesc/attributes/vad.h"

#include <algorithm>
#include <cmath>

#include "speechdesc/errors.h"

namespace speechdesc {

std::size_t SpeechMask::SpeechFrameCount() const {
  return static_cast<std::size_t>(std::count(frames.begin(), frames.end(), true));
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("Quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<double> FrameLevelsDb(const AudioClip& clip, const FramePlan& plan) {
  const std::vector<double> window = HannWindow(plan.FrameLength(clip.sample_rate_hz));
  std::vector<double> levels =
      FramePowers(clip.samples, clip.sample_rate_hz, plan, window);
  for (double& p : levels) p = 10.0 * std::log10(p + 1e-20);
  return levels;
}

SpeechMask DetectSpeech(const AudioClip& clip, const FramePlan& plan,
                        const VadOptions& options) {
  SpeechMask mask;
  mask.plan = plan;
  if (clip.empty()) return mask;
  const std::vector<double> levels = FrameLevelsDb(clip, plan);
  mask.frames.assign(levels.size(), false);

  std::vector<double> active;
  for (double level : levels) {
    if (level >= options.silence_level_db) active.push_back(level);
  }
  if (active.empty()) return mask;

  const double floor_db = Quantile(active, options.floor_quantile);
  const double top_db = Quantile(active, 1.0 - options.floor_quantile);
  if (top_db - floor_db < options.on_margin_db) {
    for (std::size_t t = 0; t < levels.size(); ++t) {
      mask.frames[t] = levels[t] >= options.silence_level_db;
    }
  } else {
    bool in_speech = false;
    for (std::size_t t = 0; t < levels.size(); ++t) {
      const double level = levels[t];
      if (level < options.silence_level_db) {
        in_speech = false;
      } else if (!in_speech) {
        in_speech = level >= floor_db + options.on_margin_db;
      } else {
        in_speech = level >= floor_db + options.off_margin_db;
      }
      mask.frames[t] = in_speech;
    }
    // Drop runs too short to be speech.
    std::size_t t = 0;
    while (t < mask.frames.size()) {
      if (!mask.frames[t]) {
        ++t;
        continue;
      }
      std::size_t end = t;
      while (end < mask.frames.size() && mask.frames[end]) ++end;
      if (end - t < static_cast<std::size_t>(options.min_speech_frames)) {
        std::fill(mask.frames.begin() + t, mask.frames.begin() + end, false);
      }
      t = end;
    }
  }
  mask.speech_duration_s =
      std::min(plan.hop_ms / 1000.0 * static_cast<double>(mask.SpeechFrameCount()),
               clip.duration_s());
  return mask;
}

}  // namespace speechdesc
