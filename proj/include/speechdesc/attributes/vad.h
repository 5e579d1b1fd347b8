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

#ifndef SPEECHDESC_ATTRIBUTES_VAD_H_
#define SPEECHDESC_ATTRIBUTES_VAD_H_

#include <cstddef>
#include <vector>

#include "speechdesc/attributes/frames.h"
#include "speechdesc/types.h"

namespace speechdesc {

struct VadOptions {
  // Hysteresis thresholds above the tracked noise floor.
  double on_margin_db = 2.5;
  double off_margin_db = 1.5;
  // Frames below this level are digital silence and never speech.
  double silence_level_db = -90.0;
  // Noise floor = this quantile of non-silent frame levels.
  double floor_quantile = 0.10;
  // Speech runs shorter than this are discarded.
  int min_speech_frames = 5;
};

struct SpeechMask {
  std::vector<bool> frames;
  double speech_duration_s = 0.0;
  FramePlan plan;

  std::size_t size() const { return frames.size(); }
  std::size_t SpeechFrameCount() const;
};

// Energy-based two-threshold VAD. When the non-silent frames show no
// separable floor (e.g. a constant tone) they are all marked speech.
SpeechMask DetectSpeech(const AudioClip& clip, const FramePlan& plan = {},
                        const VadOptions& options = {});

// Per-frame Hann-windowed level in dB full scale.
std::vector<double> FrameLevelsDb(const AudioClip& clip, const FramePlan& plan);

// Linear-interpolated quantile (q in [0, 1]) of an unsorted sample.
double Quantile(std::vector<double> values, double q);

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_VAD_H_
