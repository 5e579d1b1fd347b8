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

#ifndef SPEECHDESC_ATTRIBUTES_FRAMES_H_
#define SPEECHDESC_ATTRIBUTES_FRAMES_H_

#include <cstddef>
#include <span>
#include <vector>

namespace speechdesc {

// Short-time analysis grid shared by every frame-based estimator.
struct FramePlan {
  double frame_ms = 25.0;
  double hop_ms = 10.0;

  int FrameLength(int sample_rate_hz) const;
  int HopLength(int sample_rate_hz) const;
  // Frames starting at multiples of the hop that fit in the signal; a
  // signal shorter than one frame still yields one (zero-padded) frame.
  std::size_t FrameCount(std::size_t num_samples, int sample_rate_hz) const;
};

// Periodic Hann window of the given length.
std::vector<double> HannWindow(int length);

// Mean power of each frame, windowed when `window` is non-empty.
std::vector<double> FramePowers(std::span<const float> samples,
                                int sample_rate_hz, const FramePlan& plan,
                                std::span<const double> window);

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_FRAMES_H_
