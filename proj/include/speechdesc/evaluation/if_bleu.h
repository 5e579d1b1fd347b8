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

#ifndef SPEECHDESC_EVALUATION_IF_BLEU_H_
#define SPEECHDESC_EVALUATION_IF_BLEU_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "speechdesc/attributes/annotate.h"
#include "speechdesc/binning/binning.h"
#include "speechdesc/types.h"

namespace speechdesc {

// A synthesized clip with the transcript it was asked to speak.
struct SynthesizedItem {
  AudioClip clip;
  std::string transcript;
  std::string language;
};

struct IfBleuResult {
  double if_bleu = 0.0;
  std::map<std::string, double> accuracy;
  std::vector<AttributeLabels> candidates;
};

// Re-annotates every clip, bins it under config and scores the canonical
// label sequences against the references. Gender and style cannot be
// measured from audio, so candidates inherit them from their reference.
// Throws ValidationError on a length mismatch and ConfigError when a
// reference was binned under another config version.
IfBleuResult IfBleu(std::span<const AttributeLabels> references,
                    std::span<const SynthesizedItem> synthesized,
                    const BinningConfig& config,
                    const AnnotatorOptions& options = {});

// BLEU between already-binned candidates and references.
double IfBleuFromLabels(std::span<const AttributeLabels> references,
                        std::span<const AttributeLabels> candidates);

}  // namespace speechdesc

#endif  // SPEECHDESC_EVALUATION_IF_BLEU_H_
