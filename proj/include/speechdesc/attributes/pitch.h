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

#ifndef SPEECHDESC_ATTRIBUTES_PITCH_H_
#define SPEECHDESC_ATTRIBUTES_PITCH_H_

#include <optional>
#include <vector>

#include "speechdesc/attributes/frames.h"
#include "speechdesc/attributes/vad.h"
#include "speechdesc/types.h"

namespace speechdesc {

struct PitchOptions {
  double min_f0_hz = 50.0;
  double max_f0_hz = 600.0;
  // Aperiodicity threshold on the cumulative-mean-normalized difference.
  double threshold = 0.15;
};

// Per-frame F0 on the FramePlan grid; nullopt for unvoiced frames.
std::vector<std::optional<double>> TrackPitch(const AudioClip& clip,
                                              const FramePlan& plan = {},
                                              const PitchOptions& options = {});

struct F0Statistics {
  std::optional<double> mean_hz;  // undefined when no voiced speech frame
  std::optional<double> std_hz;
  double voiced_fraction = 0.0;   // voiced speech frames / speech frames
};

// YIN-style estimate; statistics over frames that are both voiced and speech.
F0Statistics EstimateF0(const AudioClip& clip, const SpeechMask& mask,
                        const PitchOptions& options = {});

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_PITCH_H_
