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

#include "speechdesc/corpus/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ReadU32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void PutU16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>(v >> 8));
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Polyphase bank for an up-by-L, down-by-M conversion.
struct PolyphaseBank {
  int up = 1;
  int down = 1;
  int half_taps = 0;  // taps each side, in input samples
  std::vector<std::vector<double>> phases;
};

PolyphaseBank DesignBank(int from, int to) {
  constexpr int kZeroCrossings = 24;
  constexpr double kBeta = 8.6;
  constexpr double kRolloff = 0.94;
  const int g = std::gcd(from, to);
  PolyphaseBank bank;
  bank.up = to / g;
  bank.down = from / g;
  // Cutoff relative to the input Nyquist frequency.
  const double cutoff = kRolloff * std::min(1.0, static_cast<double>(to) / from);
  bank.half_taps = static_cast<int>(std::ceil(kZeroCrossings / cutoff));
  const double i0_beta = boost::math::cyl_bessel_i(0, kBeta);
  bank.phases.resize(bank.up);
  for (int phase = 0; phase < bank.up; ++phase) {
    // Fractional offset of the output instant within the input grid.
    const double frac = static_cast<double>(phase) / bank.up;
    std::vector<double>& taps = bank.phases[phase];
    taps.resize(2 * bank.half_taps + 1);
    for (int k = -bank.half_taps; k <= bank.half_taps; ++k) {
      const double x = k - frac;
      const double r = x / (bank.half_taps + 1);
      double window = 0.0;
      if (std::abs(r) < 1.0) {
        window = boost::math::cyl_bessel_i(0, kBeta * std::sqrt(1.0 - r * r)) /
                 i0_beta;
      }
      const double arg = M_PI * cutoff * x;
      const double sinc = std::abs(arg) < 1e-12 ? 1.0 : std::sin(arg) / arg;
      taps[k + bank.half_taps] = cutoff * sinc * window;
    }
  }
  return bank;
}

}  // namespace

WavData ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();
  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw DecodeError(path.string() + ": not a RIFF/WAVE file");
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* payload = nullptr;
  std::size_t payload_size = 0;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    const std::uint32_t chunk_size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = std::min<std::size_t>(chunk_size, size - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (available < 16) throw DecodeError(path.string() + ": short fmt chunk");
      format = ReadU16(data + body);
      channels = ReadU16(data + body + 2);
      rate = ReadU32(data + body + 4);
      bits = ReadU16(data + body + 14);
      if (format == kFormatExtensible) {
        if (available < 26) throw DecodeError(path.string() + ": short fmt chunk");
        format = ReadU16(data + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      payload = data + body;
      payload_size = available;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  if (!have_fmt || payload == nullptr) {
    throw DecodeError(path.string() + ": missing fmt or data chunk");
  }
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw DecodeError(path.string() + ": unsupported codec (format " +
                      std::to_string(format) + ", " + std::to_string(bits) +
                      " bits)");
  }
  if (channels < 1 || channels > 2) {
    throw DecodeError(path.string() + ": unsupported channel count " +
                      std::to_string(channels));
  }
  if (rate == 0) throw DecodeError(path.string() + ": zero sample rate");

  const std::size_t frame_bytes = static_cast<std::size_t>(channels) * bits / 8;
  const std::size_t frames = payload_size / frame_bytes;
  if (frames == 0) throw EmptyAudioError(path.string() + ": zero-length audio");

  WavData wav;
  wav.sample_rate_hz = static_cast<int>(rate);
  wav.channels = channels;
  wav.channel_samples.assign(channels, std::vector<float>(frames));
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const unsigned char* p = payload + i * frame_bytes + c * (bits / 8);
      float value;
      if (pcm16) {
        value = static_cast<std::int16_t>(ReadU16(p)) / 32768.0f;
      } else {
        std::uint32_t raw = ReadU32(p);
        std::memcpy(&value, &raw, sizeof(value));
      }
      wav.channel_samples[c][i] = value;
    }
  }
  return wav;
}

void WriteWav(const std::filesystem::path& path,
              const std::vector<std::vector<float>>& channels,
              int sample_rate_hz, WavEncoding encoding) {
  if (channels.empty()) throw Error("WriteWav: no channels");
  const std::size_t frames = channels.front().size();
  for (const auto& ch : channels) {
    if (ch.size() != frames) throw Error("WriteWav: channel length mismatch");
  }
  const std::uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const std::uint16_t num_channels = static_cast<std::uint16_t>(channels.size());
  const std::uint32_t block_align = num_channels * bits / 8;
  const std::uint32_t data_size = static_cast<std::uint32_t>(frames * block_align);

  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  PutU32(out, 36 + data_size);
  out += "WAVEfmt ";
  PutU32(out, 16);
  PutU16(out, encoding == WavEncoding::kPcm16 ? kFormatPcm : kFormatFloat);
  PutU16(out, num_channels);
  PutU32(out, static_cast<std::uint32_t>(sample_rate_hz));
  PutU32(out, static_cast<std::uint32_t>(sample_rate_hz) * block_align);
  PutU16(out, static_cast<std::uint16_t>(block_align));
  PutU16(out, bits);
  out += "data";
  PutU32(out, data_size);
  for (std::size_t i = 0; i < frames; ++i) {
    for (const auto& ch : channels) {
      if (encoding == WavEncoding::kPcm16) {
        const float clipped = std::clamp(ch[i], -1.0f, 1.0f);
        const long q = std::lround(clipped * 32767.0f);
        PutU16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
      } else {
        std::uint32_t raw;
        std::memcpy(&raw, &ch[i], sizeof(raw));
        PutU32(out, raw);
      }
    }
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failure on " + path.string());
}

void WriteWav(const std::filesystem::path& path, const AudioClip& clip,
              WavEncoding encoding) {
  WriteWav(path, std::vector<std::vector<float>>{clip.samples},
           clip.sample_rate_hz, encoding);
}

std::vector<float> Resample(std::span<const float> input, int from_rate_hz,
                            int to_rate_hz) {
  if (from_rate_hz <= 0 || to_rate_hz <= 0) {
    throw Error("Resample: sample rates must be positive");
  }
  if (from_rate_hz == to_rate_hz) return {input.begin(), input.end()};
  const PolyphaseBank bank = DesignBank(from_rate_hz, to_rate_hz);
  const std::size_t n = input.size();
  const auto out_len = static_cast<std::size_t>(std::llround(
      static_cast<double>(n) * to_rate_hz / from_rate_hz));
  std::vector<float> output(out_len);
  const long long len = static_cast<long long>(n);
  for (std::size_t i = 0; i < out_len; ++i) {
    // Output instant i sits at input position i * down / up.
    const long long numer = static_cast<long long>(i) * bank.down;
    const long long base = numer / bank.up;
    const int phase = static_cast<int>(numer % bank.up);
    const std::vector<double>& taps = bank.phases[phase];
    double acc = 0.0;
    const long long first = base - bank.half_taps;
    const long long k_begin = std::max<long long>(0, -first);
    const long long k_end = std::min<long long>(
        static_cast<long long>(taps.size()), len - first);
    for (long long k = k_begin; k < k_end; ++k) {
      acc += taps[static_cast<std::size_t>(k)] * input[static_cast<std::size_t>(first + k)];
    }
    output[i] = static_cast<float>(acc);
  }
  return output;
}

AudioClip LoadAudio(const std::filesystem::path& path, int target_rate_hz) {
  if (target_rate_hz < 8000) {
    throw Error("LoadAudio: target rate must be at least 8000 Hz");
  }
  WavData wav = ReadWav(path);
  std::vector<float> mono;
  if (wav.channels == 1) {
    mono = std::move(wav.channel_samples.front());
  } else {
    const auto& left = wav.channel_samples[0];
    const auto& right = wav.channel_samples[1];
    mono.resize(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      mono[i] = 0.5f * (left[i] + right[i]);
    }
  }
  AudioClip clip;
  clip.sample_rate_hz = target_rate_hz;
  clip.samples = Resample(mono, wav.sample_rate_hz, target_rate_hz);
  if (clip.samples.empty()) {
    throw EmptyAudioError(path.string() + ": zero-length audio after resampling");
  }
  float peak = 0.0f;
  for (float s : clip.samples) peak = std::max(peak, std::abs(s));
  if (!std::isfinite(peak)) throw DecodeError(path.string() + ": non-finite samples");
  if (peak > 1.0f) {
    const float scale = 1.0f / peak;
    for (float& s : clip.samples) s *= scale;
  }
  return clip;
}

}  // namespace speechdesc
