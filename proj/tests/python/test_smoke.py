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

import json
import math
import os
import pathlib
import struct
import wave

import pytest

import speechdesc

FIXTURES = pathlib.Path(os.environ.get("SPEECHDESC_FIXTURE_DIR", pathlib.Path(__file__).parents[1] / "fixtures"))
RATE = 16000


def tone(freq, seconds, amp=0.5):
    return [amp * math.sin(2 * math.pi * freq * n / RATE) for n in range(int(seconds * RATE))]


def test_count_syllables():
    assert speechdesc.count_syllables("hello world", "eng") == 3
    assert speechdesc.count_syllables("বাংলা", "ben") == 2
    with pytest.raises(speechdesc.ValidationError):
        speechdesc.count_syllables("x", "xxx")


def test_c50_direct_path_only():
    rir = [1.0] + [0.0] * 7999
    assert speechdesc.c50_from_rir(rir, RATE) == pytest.approx(60.0)


def test_annotate_bin_caption_parse_round_trip():
    samples = [0.0] * 4000 + tone(220.0, 1.5) + [0.0] * 4000
    attrs = speechdesc.annotate(samples, RATE, "hello there friend", "eng")
    assert attrs["f0_mean_hz"] == pytest.approx(220.0, abs=3.0)
    labels = speechdesc.bin_attributes(attrs, gender="female", style="happy")
    assert labels["gender"] == "female"
    captions = speechdesc.generate_captions(labels, seed=3)
    assert captions == speechdesc.generate_captions(labels, seed=3)
    parsed = speechdesc.parse_caption(captions["descriptive"])
    assert parsed["pitch"] == labels["pitch"]
    assert parsed["style"] == "happy"


def test_corpus_bleu_and_error_rates():
    seq = ["a", "b", "c", "d", "e"]
    assert speechdesc.corpus_bleu([seq], [seq]) == pytest.approx(100.0)
    rates = speechdesc.cer_wer(["the cat"], ["the cat"])
    assert rates["cer_pct"] == 0.0 and rates["wer_pct"] == 0.0
    with pytest.raises(speechdesc.ValidationError):
        speechdesc.corpus_bleu([seq], [])


def test_mushra_fixture():
    rows = [json.loads(line) for line in (FIXTURES / "mushra_ratings.jsonl").open(encoding="utf-8")]
    out = {s["system"]: s for s in speechdesc.mushra_aggregate(
        [(r["system"], r["utterance"], r["rater"], r["score"]) for r in rows])}
    assert round(out["human"]["mean"], 1) == 89.7
    assert round(out["human"]["half_width"], 1) == 1.8
    assert round(out["ours"]["mean"], 1) == 81.7


def write_wav(path, samples):
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(RATE)
        w.writeframes(b"".join(struct.pack("<h", int(max(-1, min(1, s)) * 32767)) for s in samples))


def test_run_annotate_and_stats(tmp_path):
    records = []
    for i, (freq, lang, text) in enumerate([(140.0, "eng", "one two three"), (260.0, "hin", "नमस्ते भारत")]):
        write_wav(tmp_path / f"u{i}.wav", [0.0] * 3200 + tone(freq, 1.0) + [0.0] * 3200)
        records.append({"utterance_id": f"u{i}", "audio_ref": f"u{i}.wav", "transcript": text,
                        "language": lang, "speaker": {"gender": "male"}})
    (tmp_path / "m.jsonl").write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records),
                                      encoding="utf-8")
    (tmp_path / "config.json").write_text(json.dumps({"manifests": ["m.jsonl"], "output": "out.jsonl"}))
    report = speechdesc.run_annotate(tmp_path / "config.json", workers=2)
    assert report["annotated"] == 2 and report["failed"] == 0
    stats = speechdesc.run_stats(tmp_path / "out.jsonl")
    assert set(stats["languages"]) == {"eng", "hin"}


def test_config_error_type(tmp_path):
    (tmp_path / "bad.json").write_text(json.dumps({"manifests": []}))
    with pytest.raises(speechdesc.ConfigError):
        speechdesc.run_annotate(tmp_path / "bad.json")
