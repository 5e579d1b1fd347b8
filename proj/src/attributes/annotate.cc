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

#include "speechdesc/attributes/annotate.h"

#include "speechdesc/attributes/syllables.h"

namespace speechdesc {

AcousticAttributes Annotate(const UtteranceRecord& record, const AudioClip& clip,
                            const AnnotatorOptions& options) {
  AcousticAttributes out;
  const SpeechMask mask = DetectSpeech(clip, options.plan, options.vad);
  out.speech_duration_s = mask.speech_duration_s;
  if (mask.SpeechFrameCount() == 0) out.flags.push_back(kFlagNoSpeech);

  const F0Statistics f0 = EstimateF0(clip, mask, options.pitch);
  out.f0_mean_hz = f0.mean_hz;
  out.f0_std_hz = f0.std_hz;
  out.voiced_fraction = f0.voiced_fraction;
  if (!f0.mean_hz) out.flags.push_back(kFlagF0Undefined);

  out.snr_db = EstimateSnr(clip, mask, options.snr);
  if (!out.snr_db) out.flags.push_back(kFlagSnrUndefined);

  out.c50_db = EstimateC50Blind(clip, mask, options.c50);
  if (!out.c50_db) out.flags.push_back(kFlagC50Undefined);

  out.speaking_rate_sps =
      SpeakingRate(record.transcript, record.language, mask.speech_duration_s);
  if (!out.speaking_rate_sps) out.flags.push_back(kFlagRateUndefined);

  out.quality_score =
      EstimateQuality(clip, mask, out.snr_db, out.c50_db, options.quality);
  if (!out.quality_score) out.flags.push_back(kFlagQualityUndefined);
  return out;
}

}  // namespace speechdesc
