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

#include "speechdesc/attributes/c50.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

constexpr double kDbPerNeper = 8.685889638065035;  // 20 / ln(10)

// Least-squares slope of y against x.
double FitSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

bool NearSpeech(const SpeechMask& mask, double time_s) {
  if (mask.frames.empty()) return false;
  const double hop_s = mask.plan.hop_ms / 1000.0;
  const long long centre = std::llround(time_s / hop_s);
  for (long long t = centre - 3; t <= centre + 3; ++t) {
    if (t >= 0 && t < static_cast<long long>(mask.frames.size()) &&
        mask.frames[static_cast<std::size_t>(t)]) {
      return true;
    }
  }
  return false;
}

}  // namespace

double C50FromRir(std::span<const float> rir, int sample_rate_hz) {
  if (rir.empty()) throw Error("C50FromRir: empty impulse response");
  if (sample_rate_hz <= 0) throw Error("C50FromRir: invalid sample rate");
  double peak = 0.0;
  for (float h : rir) peak = std::max(peak, static_cast<double>(std::abs(h)));
  if (peak == 0.0) throw Error("C50FromRir: all-zero impulse response");
  const double onset_level = peak * 0.1;
  std::size_t onset = 0;
  while (std::abs(rir[onset]) < onset_level) ++onset;
  const auto early_len =
      static_cast<std::size_t>(std::llround(0.05 * sample_rate_hz));
  double early = 0.0, late = 0.0;
  for (std::size_t i = onset; i < rir.size(); ++i) {
    const double e = static_cast<double>(rir[i]) * rir[i];
    (i - onset < early_len ? early : late) += e;
  }
  if (late <= 0.0 || early / late > 1e6) return kMaxC50Db;
  return 10.0 * std::log10(early / late);
}

double C50FromDecayConstant(double tau_s) {
  if (!(tau_s > 0.0)) return kMaxC50Db;
  const double x = 0.1 / tau_s;
  if (x > 20.0) return kMaxC50Db;
  return std::min(kMaxC50Db, 10.0 * std::log10(std::expm1(x)));
}

std::optional<double> EstimateC50Blind(const AudioClip& clip,
                                       const SpeechMask& mask,
                                       const BlindC50Options& options) {
  if (clip.empty() || mask.SpeechFrameCount() == 0) return std::nullopt;
  const int rate = clip.sample_rate_hz;
  const auto block =
      static_cast<std::size_t>(std::max(1L, std::lround(options.block_ms * rate / 1000.0)));
  const std::size_t blocks = clip.samples.size() / block;
  if (blocks < 8) return std::nullopt;
  const double block_s = static_cast<double>(block) / rate;

  std::vector<double> energy(blocks, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < block; ++i) {
      const double x = clip.samples[b * block + i];
      acc += x * x;
    }
    energy[b] = acc / static_cast<double>(block);
  }
  const int half = std::max(
      0, static_cast<int>(std::lround(options.smoothing_ms / options.block_ms)) / 2);
  std::vector<double> level(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b >= static_cast<std::size_t>(half) ? b - half : 0;
    const std::size_t hi = std::min(blocks - 1, b + half);
    double acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) acc += energy[j];
    level[b] = 10.0 * std::log10(acc / static_cast<double>(hi - lo + 1) + 1e-20);
  }
  const double floor_db = std::max(-100.0, Quantile(level, 0.05));

  std::vector<double> taus;
  std::size_t b = 0;
  while (b + 1 < blocks) {
    if (level[b + 1] >= level[b]) {
      ++b;
      continue;
    }
    std::size_t start = b;
    double run_min = level[start];
    std::size_t arg_min = start;
    std::size_t e = start + 1;
    while (e < blocks && level[e] <= run_min + options.ripple_db &&
           level[e] > floor_db + 3.0) {
      if (level[e] < run_min) {
        run_min = level[e];
        arg_min = e;
      }
      ++e;
    }
    // Skip any plateau so the fit starts where the sustained decay begins.
    for (std::size_t k = arg_min; k > start; --k) {
      if (level[k] >= level[start] - options.ripple_db) {
        start = k;
        break;
      }
    }
    const double drop = level[start] - run_min;
    const double start_time = (static_cast<double>(start) + 0.5) * block_s;
    if (drop < options.min_drop_db || level[start] < floor_db + 25.0 ||
        !NearSpeech(mask, start_time)) {
      b = start + 1;
      continue;
    }

    // Schroeder backward integration over [start, arg_min].
    std::vector<double> edc(arg_min - start + 1);
    double tail = 0.0;
    for (std::size_t k = arg_min + 1; k-- > start;) {
      tail += energy[k];
      edc[k - start] = tail;
    }
    const double total = edc.front();
    const double fit_top = -5.0;
    const double fit_bottom = -std::min(25.0, drop - 10.0);
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < edc.size(); ++k) {
      const double db = 10.0 * std::log10(edc[k] / total + 1e-30);
      if (db <= fit_top && db >= fit_bottom) {
        xs.push_back(static_cast<double>(k) * block_s);
        ys.push_back(db);
      }
    }
    double slope;
    if (xs.size() >= 3) {
      slope = FitSlope(xs, ys);
    } else {
      slope = -drop / (static_cast<double>(arg_min - start) * block_s);
    }
    if (slope < 0.0) taus.push_back(-kDbPerNeper / slope);
    b = std::max(e, start + 1);
  }
  if (taus.empty()) return std::nullopt;
  std::sort(taus.begin(), taus.end());
  const std::size_t mid = taus.size() / 2;
  const double tau = taus.size() % 2 == 1 ? taus[mid] : 0.5 * (taus[mid - 1] + taus[mid]);
  return std::clamp(C50FromDecayConstant(tau), kMinC50Db, kMaxC50Db);
}

}  // namespace speechdesc
