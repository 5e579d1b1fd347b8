#!/usr/bin/env python3
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
"""Writes the aggregation fixtures under tests/fixtures.

  attribute_prediction_pairs.jsonl  reference/candidate label pairs
  mushra_ratings.jsonl              per-utterance listener scores
  emotion_judgments.jsonl           (true, judged, count) listening results
  asr_pairs.jsonl                   multilingual reference/hypothesis pairs

Every file is checked against the target aggregates before it is written.
Deterministic for a given --seed.
"""
import argparse
import json
import math
import pathlib
import random
import unicodedata

from scipy import stats

BINNED = {
    "pitch": ["very low pitch", "low pitch", "moderate pitch", "high pitch", "very high pitch"],
    "pitch_variation": ["monotone", "expressive tone"],
    "reverb": ["very distant sounding", "distant sounding", "slightly distant sounding",
               "slightly close sounding", "very close sounding"],
    "snr": ["very noisy", "noisy", "slightly noisy", "clear", "very clear"],
    "rate": ["slow pace", "slightly slow pace", "moderate pace", "slightly fast pace", "fast pace"],
    "quality": ["poor speech quality", "moderate speech quality", "good speech quality",
                "great speech quality"],
}

# Percent of utterances whose re-annotated label matches the reference.
ACCURACY_TARGETS = {
    "reverb": 99.26,
    "pitch_variation": 96.61,
    "pitch": 86.2,
    "snr": 96.83,
    "rate": 97.12,
    "quality": 80.44,
}
PAIR_ROWS = 10000

# (mean, 95% half-width) per system over all ratings.
MUSHRA_TARGETS = {"human": (89.7, 1.8), "ours": (81.7, 2.7)}
MUSHRA_LANGS = ["asm", "ben", "brx", "guj", "hin", "kan", "mai", "mal", "mar", "nep", "tam",
                "tel", "urd"]

EMOTIONS = ["anger", "disgust", "fear", "happy", "neutral", "sad", "surprise"]
# Required row cells; the rest of each row is filled with plausible confusions.
EMOTION_TARGETS = {
    "anger": {"anger": 72.54},
    "disgust": {"disgust": 70.0},
    "fear": {"fear": 85.09},
    "happy": {"happy": 84.74},
    "neutral": {"neutral": 88.0},
    "sad": {"sad": 65.35, "fear": 15.18},
    "surprise": {"surprise": 78.83},
}


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")


def prediction_pairs(rng):
    wrong = {a: PAIR_ROWS - round(p * PAIR_ROWS / 100) for a, p in ACCURACY_TARGETS.items()}
    miss = {a: set(rng.sample(range(PAIR_ROWS), n)) for a, n in wrong.items()}
    rows = []
    for i in range(PAIR_ROWS):
        ref = {a: rng.choice(v) for a, v in BINNED.items()}
        ref["gender"] = rng.choice(["female", "male"])
        ref["style"] = rng.choice(EMOTIONS)
        ref["config_version"] = "default-v1"
        cand = dict(ref)
        for a in BINNED:
            if i in miss[a]:
                # Confusions land on a neighbouring bin.
                labels = BINNED[a]
                k = labels.index(ref[a])
                options = [j for j in (k - 1, k + 1) if 0 <= j < len(labels)]
                cand[a] = labels[rng.choice(options)]
        rows.append({"utterance_id": f"utt{i:05d}", "reference": ref, "candidate": cand})
    for a, target in ACCURACY_TARGETS.items():
        hits = sum(r["reference"][a] == r["candidate"][a] for r in rows)
        assert abs(100.0 * hits / PAIR_ROWS - target) < 1e-9, a
    return rows


def half_width(scores, confidence=0.95):
    n = len(scores)
    mean = sum(scores) / n
    sd = math.sqrt(sum((s - mean) ** 2 for s in scores) / (n - 1))
    return stats.t.ppf(0.5 + confidence / 2, n - 1) * sd / math.sqrt(n)


def mushra_scores(rng, mean, hw, n):
    """Integer scores in [0, 100] with the exact mean and a half-width within 0.005."""
    total = round(mean * n)
    assert abs(total / n - mean) < 1e-9
    target_sd = hw * math.sqrt(n) / stats.t.ppf(0.975, n - 1)
    scores = [min(100, max(0, round(rng.gauss(mean, target_sd)))) for _ in range(n)]
    # Restore the exact sum one point at a time.
    while sum(scores) != total:
        i = rng.randrange(n)
        step = 1 if sum(scores) < total else -1
        if 0 <= scores[i] + step <= 100:
            scores[i] += step
    # Spread or tighten in sum-preserving pairs until the half-width lands.
    for _ in range(200000):
        err = half_width(scores) - hw
        if abs(err) < 0.005:
            return scores
        i, j = rng.randrange(n), rng.randrange(n)
        if scores[i] < scores[j]:
            i, j = j, i
        # err > 0: move the pair together; else apart.
        d = -1 if err > 0 else 1
        if scores[i] == scores[j] and d < 0:
            continue
        if 0 <= scores[i] + d <= 100 and 0 <= scores[j] - d <= 100:
            scores[i] += d
            scores[j] -= d
    raise RuntimeError("half-width search did not converge")


def mushra_ratings(rng):
    rows = []
    raters = [f"r{k:02d}" for k in range(5)]
    utterances = [f"{lang}_{u:02d}" for lang in MUSHRA_LANGS for u in range(4)]
    n = len(utterances) * len(raters)
    for system, (mean, hw) in MUSHRA_TARGETS.items():
        scores = mushra_scores(rng, mean, hw, n)
        k = 0
        for utt in utterances:
            for rater in raters:
                rows.append({"system": system, "utterance": utt, "rater": rater,
                             "score": scores[k]})
                k += 1
        assert round(sum(scores) / n, 1) == mean
        assert round(half_width(scores), 1) == hw
    return rows


def round_half_even(x):
    f = math.floor(x)
    r = x - f
    if r > 0.5 or (r == 0.5 and f % 2 == 1):
        return f + 1
    return f


def row_percent(counts):
    """Hundredth-percent units with largest-remainder correction to 10000."""
    total = sum(counts)
    exact = [10000.0 * c / total for c in counts]
    units = [round_half_even(e) for e in exact]
    order = sorted(range(len(counts)), key=lambda c: (-(exact[c] - units[c]), c))
    i = 0
    while sum(units) < 10000:
        units[order[i]] += 1
        i += 1
    i = len(order)
    while sum(units) > 10000:
        i -= 1
        if units[order[i]] > 0:
            units[order[i]] -= 1
    return [u / 100 for u in units]


def emotion_row(rng, true_class, targets):
    for n in range(1200, 4000):
        counts = {c: round(p * n / 100) for c, p in targets.items()}
        rest = n - sum(counts.values())
        others = [c for c in EMOTIONS if c not in targets]
        weights = [rng.random() + (1.0 if c == "neutral" else 0.2) for c in others]
        share = [int(rest * w / sum(weights)) for w in weights]
        share[0] += rest - sum(share)
        row = [counts.get(c, 0) for c in EMOTIONS]
        for c, s in zip(others, share):
            row[EMOTIONS.index(c)] = s
        pct = row_percent(row)
        plain = [round_half_even(10000.0 * c / n) / 100 for c in row]
        if all(pct[EMOTIONS.index(c)] == p == plain[EMOTIONS.index(c)]
               for c, p in targets.items()):
            return row
    raise RuntimeError(f"no row total reproduces {true_class}")


def emotion_judgments(rng):
    rows = []
    for true_class in EMOTIONS:
        counts = emotion_row(rng, true_class, EMOTION_TARGETS[true_class])
        for judged, count in zip(EMOTIONS, counts):
            if count:
                rows.append({"true": true_class, "judged": judged, "count": count})
    return rows


ASR_SENTENCES = {
    "eng": ["the quick brown fox jumps over the lazy dog", "please turn on the kitchen lights",
            "she sells sea shells by the sea shore", "what time does the next train leave"],
    "hin": ["मेरा नाम राम है", "आज मौसम बहुत अच्छा है", "कृपया दरवाज़ा बंद करें", "हम कल दिल्ली जाएँगे"],
    "ben": ["আমি ভাত খাই", "আজ খুব গরম পড়েছে", "তুমি কোথায় যাচ্ছ"],
    "tam": ["நான் பள்ளிக்குச் செல்கிறேன்", "இன்று மழை பெய்கிறது", "உங்கள் பெயர் என்ன"],
    "tel": ["నేను ఇంటికి వెళ్తున్నాను", "ఈ రోజు చాలా వేడిగా ఉంది"],
    "urd": ["میرا نام علی ہے", "آج موسم اچھا ہے"],
    "mar": ["मी शाळेत जातो", "आज पाऊस पडत आहे"],
}


def perturb(rng, sentence):
    words = sentence.split()
    kind = rng.randrange(5)
    if kind == 0 and len(words) > 1:
        del words[rng.randrange(len(words))]
    elif kind == 1:
        words.insert(rng.randrange(len(words) + 1), rng.choice(words))
    elif kind == 2:
        i = rng.randrange(len(words))
        w = list(words[i])
        j = rng.randrange(len(w))
        w[j] = rng.choice([c for c in "".join(words) if c != w[j]] or ["x"])
        words[i] = "".join(w)
    elif kind == 3:
        i, j = rng.randrange(len(words)), rng.randrange(len(words))
        words[i], words[j] = words[j], words[i]
    return " ".join(words)


def asr_pairs(rng):
    rows = []
    langs = sorted(ASR_SENTENCES)
    for i in range(50):
        lang = langs[i % len(langs)]
        ref = unicodedata.normalize("NFC", rng.choice(ASR_SENTENCES[lang]))
        hyp = unicodedata.normalize("NFC", perturb(rng, ref))
        rows.append({"utterance_id": f"asr{i:02d}", "language": lang, "reference": ref,
                     "hypothesis": hyp})
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent / "tests" / "fixtures"))
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_jsonl(out / "attribute_prediction_pairs.jsonl", prediction_pairs(random.Random(args.seed)))
    write_jsonl(out / "mushra_ratings.jsonl", mushra_ratings(random.Random(args.seed + 1)))
    write_jsonl(out / "emotion_judgments.jsonl", emotion_judgments(random.Random(args.seed + 2)))
    write_jsonl(out / "asr_pairs.jsonl", asr_pairs(random.Random(args.seed + 3)))


if __name__ == "__main__":
    main()
