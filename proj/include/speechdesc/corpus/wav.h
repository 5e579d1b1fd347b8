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

#ifndef SPEECHDESC_CORPUS_WAV_H_
#define SPEECHDESC_CORPUS_WAV_H_

#include <filesystem>
#include <span>
#include <vector>

#include "speechdesc/types.h"

namespace speechdesc {

// Internal processing rate for every estimator.
inline constexpr int kInternalSampleRate = 16000;

enum class WavEncoding { kPcm16, kFloat32 };

struct WavData {
  int sample_rate_hz = 0;
  int channels = 0;
  std::vector<std::vector<float>> channel_samples;  // deinterleaved
};

// Accepts RIFF/WAVE PCM 16-bit or IEEE float 32-bit, one or two channels.
// Throws IoError, DecodeError, or EmptyAudioError.
WavData ReadWav(const std::filesystem::path& path);

// `channels` is interleaved when more than one channel is given.
void WriteWav(const std::filesystem::path& path,
              const std::vector<std::vector<float>>& channels,
              int sample_rate_hz, WavEncoding encoding = WavEncoding::kPcm16);
void WriteWav(const std::filesystem::path& path, const AudioClip& clip,
              WavEncoding encoding = WavEncoding::kPcm16);

// Band-limited rational resampling (Kaiser-windowed sinc, polyphase).
// Output length is round(n * to / from).
std::vector<float> Resample(std::span<const float> input, int from_rate_hz,
                            int to_rate_hz);

// Channel-average downmix, resampling to `target_rate_hz`, and peak
// normalization when |peak| exceeds 1.
AudioClip LoadAudio(const std::filesystem::path& path,
                    int target_rate_hz = kInternalSampleRate);

}  // namespace speechdesc

#endif  // SPEECHDESC_CORPUS_WAV_H_
