# Copyright 2026 The speechdesc Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Speech corpus annotation: acoustic attributes, binning, captions, metrics."""

import json

from . import _core
from ._core import (
    ConfigError,
    Error,
    ValidationError,
    c50_from_rir,
    cer_wer,
    corpus_bleu,
    count_syllables,
    mushra_aggregate,
    parse_caption,
)

__all__ = [
    "ConfigError",
    "Error",
    "ValidationError",
    "annotate",
    "bin_attributes",
    "c50_from_rir",
    "cer_wer",
    "corpus_bleu",
    "count_syllables",
    "generate_captions",
    "mushra_aggregate",
    "parse_caption",
    "run_annotate",
    "run_stats",
]


def annotate(samples, sample_rate_hz, transcript="", language="eng"):
    """Acoustic attributes of a mono clip as a dict."""
    return json.loads(_core.annotate(list(map(float, samples)), int(sample_rate_hz),
                                     transcript, language))


def bin_attributes(attributes, gender="unspecified", style="unspecified", binning_config=""):
    return json.loads(_core.bin_attributes(json.dumps(attributes), gender, style,
                                           str(binning_config)))


def generate_captions(labels, seed=0):
    return json.loads(_core.generate_captions(json.dumps(labels), seed))


def run_annotate(config, workers=0, resume=False):
    return json.loads(_core.run_annotate(str(config), workers, resume))


def run_stats(manifest):
    return json.loads(_core.run_stats(str(manifest)))
