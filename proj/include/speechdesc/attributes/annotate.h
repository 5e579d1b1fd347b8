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

#ifndef SPEECHDESC_ATTRIBUTES_ANNOTATE_H_
#define SPEECHDESC_ATTRIBUTES_ANNOTATE_H_

#include "speechdesc/attributes/c50.h"
#include "speechdesc/attributes/frames.h"
#include "speechdesc/attributes/pitch.h"
#include "speechdesc/attributes/quality.h"
#include "speechdesc/attributes/snr.h"
#include "speechdesc/attributes/vad.h"
#include "speechdesc/types.h"

namespace speechdesc {

struct AnnotatorOptions {
  FramePlan plan;
  VadOptions vad;
  PitchOptions pitch;
  SnrOptions snr;
  BlindC50Options c50;
  QualityModel quality;
};

// Flag strings recorded in AcousticAttributes::flags.
inline constexpr const char* kFlagNoSpeech = "no_speech";
inline constexpr const char* kFlagF0Undefined = "f0_undefined";
inline constexpr const char* kFlagSnrUndefined = "snr_undefined";
inline constexpr const char* kFlagC50Undefined = "c50_undefined";
inline constexpr const char* kFlagRateUndefined = "speaking_rate_undefined";
inline constexpr const char* kFlagQualityUndefined = "quality_undefined";

// Runs VAD, then the F0, SNR, blind C50, speaking-rate and quality
// estimators. A pure function of its inputs; undefined measurements are
// left empty and flagged rather than raising.
AcousticAttributes Annotate(const UtteranceRecord& record, const AudioClip& clip,
                            const AnnotatorOptions& options = {});

}  // namespace speechdesc

#endif  // SPEECHDESC_ATTRIBUTES_ANNOTATE_H_
