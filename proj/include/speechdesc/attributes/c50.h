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

#ifndef SPEECHDESC_ATTRIBUTES_C50_H_
#define SPEECHDESC_ATTRIBUTES_C50_H_

#include <optional>
#include <span>

#include "speechdesc/attributes/vad.h"
#include "speechdesc/types.h"

namespace speechdesc {

inline constexpr double kMinC50Db = -10.0;
inline constexpr double kMaxC50Db = 60.0;

// Clarity index of an impulse response: early (first 50 ms from onset) over
// late energy in dB. Onset is the first sample within 20 dB of the peak.
// Values above kMaxC50Db (including zero late energy) return kMaxC50Db.
// Throws Error on an empty or all-zero response.
double C50FromRir(std::span<const float> rir, int sample_rate_hz);

// C50 of an ideal exponential decay whose energy falls as exp(-2 t / tau).
double C50FromDecayConstant(double tau_s);

struct BlindC50Options {
  double block_ms = 2.0;
  double smoothing_ms = 20.0;
  // A free-decay region must fall at least this far below its peak.
  double min_drop_db = 20.0;
  // Upward excursions tolerated inside a decay.
  double ripple_db = 3.0;
};

// Energy-decay-rate estimate from speech offsets: each free-decay region is
// Schroeder-integrated, a line is fitted to its decay curve, and the median
// decay constant is mapped through C50FromDecayConstant. nullopt when the
// clip has no usable offset. Result clamped to [kMinC50Db, kMaxC50Db].
std::optional<double> EstimateC50Blind(const AudioClip& clip,
                                       const SpeechMask& mask,
                                       const BlindC50Options& options = {});

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_C50_H_
