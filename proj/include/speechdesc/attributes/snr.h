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

#ifndef SPEECHDESC_ATTRIBUTES_SNR_H_
#define SPEECHDESC_ATTRIBUTES_SNR_H_

#include <optional>
#include <span>

#include "speechdesc/attributes/vad.h"
#include "speechdesc/types.h"

namespace speechdesc {

inline constexpr double kMinSnrDb = -10.0;
inline constexpr double kMaxSnrDb = 60.0;

struct SnrOptions {
  // Below this share of non-speech frames the blind estimate is used.
  double min_noise_fraction = 0.05;
};

// Energy-ratio SNR between speech and non-speech frames, with the noise
// power subtracted from the speech-frame power. Falls back to the WADA
// estimate when non-speech frames are rare. nullopt when the mask has no
// speech. Result clamped to [kMinSnrDb, kMaxSnrDb].
std::optional<double> EstimateSnr(const AudioClip& clip, const SpeechMask& mask,
                                  const SnrOptions& options = {});

// Waveform-amplitude-distribution SNR (Gamma speech / Gaussian noise model),
// unclamped within the table range of [-20, 100] dB.
double WadaSnr(std::span<const float> samples);

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_SNR_H_
