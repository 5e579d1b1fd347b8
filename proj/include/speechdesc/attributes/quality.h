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

#ifndef SPEECHDESC_ATTRIBUTES_QUALITY_H_
#define SPEECHDESC_ATTRIBUTES_QUALITY_H_

#include <optional>

#include "speechdesc/attributes/vad.h"
#include "speechdesc/types.h"

namespace speechdesc {

inline constexpr double kMinQuality = 1.0;
inline constexpr double kMaxQuality = 4.5;

// Reference-free quality on the PESQ-like [1.0, 4.5] scale:
//   1 + 3.5 * s(snr) * s(c50) * (1 - w * flatness_penalty)
// with logistic s(). Monotone nondecreasing in both snr_db and c50_db.
struct QualityModel {
  double snr_midpoint_db = 15.0;
  double snr_slope = 0.25;
  double c50_midpoint_db = 5.0;
  double c50_slope = 0.3;
  double flatness_weight = 0.4;
  // Flatness below `flatness_onset` is not penalized; full penalty at
  // `flatness_onset + flatness_span`.
  double flatness_onset = 0.2;
  double flatness_span = 0.6;

  // An undefined c50_db drops the clarity term.
  double Score(double snr_db, std::optional<double> c50_db, double flatness) const;
};

// Spectral flatness (geometric / arithmetic mean) of the average power
// spectrum of speech frames between 100 Hz and 4 kHz. White noise is near 1,
// voiced speech well below.
double SpectralFlatness(const AudioClip& clip, const SpeechMask& mask);

std::optional<double> EstimateQuality(const AudioClip& clip,
                                      const SpeechMask& mask,
                                      std::optional<double> snr_db,
                                      std::optional<double> c50_db,
                                      const QualityModel& model = {});

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_QUALITY_H_
