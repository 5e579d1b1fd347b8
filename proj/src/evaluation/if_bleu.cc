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

#include "speechdesc/evaluation/if_bleu.h"

#include "speechdesc/errors.h"
#include "speechdesc/evaluation/bleu.h"
#include "speechdesc/evaluation/metrics.h"

namespace speechdesc {

double IfBleuFromLabels(std::span<const AttributeLabels> references,
                        std::span<const AttributeLabels> candidates) {
  if (references.size() != candidates.size()) {
    throw ValidationError("IF-BLEU: " + std::to_string(references.size()) +
                          " references vs " + std::to_string(candidates.size()) +
                          " candidates");
  }
  std::vector<TokenSequence> refs, cands;
  refs.reserve(references.size());
  cands.reserve(candidates.size());
  for (std::size_t i = 0; i < references.size(); ++i) {
    refs.push_back(SplitCommaTokens(LabelsToSequence(references[i])));
    cands.push_back(SplitCommaTokens(LabelsToSequence(candidates[i])));
  }
  return CorpusBleu(cands, refs);
}

IfBleuResult IfBleu(std::span<const AttributeLabels> references,
                    std::span<const SynthesizedItem> synthesized,
                    const BinningConfig& config, const AnnotatorOptions& options) {
  if (references.size() != synthesized.size()) {
    throw ValidationError("IF-BLEU: " + std::to_string(references.size()) +
                          " references vs " + std::to_string(synthesized.size()) +
                          " synthesized clips");
  }
  IfBleuResult result;
  result.candidates.reserve(references.size());
  for (std::size_t i = 0; i < references.size(); ++i) {
    const AttributeLabels& ref = references[i];
    RequireSameVersion(config.version(), ref.config_version);
    UtteranceRecord record;
    record.transcript = synthesized[i].transcript;
    record.language = synthesized[i].language;
    const AcousticAttributes attrs = Annotate(record, synthesized[i].clip, options);
    SpeakerMetadata speaker;
    speaker.gender = ref.gender;
    speaker.age_group = ref.age_group;
    speaker.accent = ref.accent;
    speaker.display_name = ref.speaker_name;
    StyleMetadata style;
    style.style = ref.style;
    style.env_tags = ref.env_tags;
    result.candidates.push_back(BinAttributes(attrs, speaker, style, config));
  }
  result.if_bleu = IfBleuFromLabels(references, result.candidates);
  result.accuracy = AttributeAccuracy(references, result.candidates);
  return result;
}

}  // namespace speechdesc
