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

#include <cmath>

#include <gtest/gtest.h>

#include "speechdesc/binning/binning.h"
#include "speechdesc/errors.h"
#include "speechdesc/evaluation/bleu.h"
#include "speechdesc/evaluation/edit_distance.h"
#include "speechdesc/evaluation/if_bleu.h"
#include "speechdesc/evaluation/metrics.h"
#include "speechdesc/evaluation/report.h"
#include "support/oracles.h"

namespace speechdesc {
namespace {

AttributeLabels Labels(std::string rate) {
  AttributeLabels l;
  l.binned = {"high pitch", "expressive tone", "slightly close sounding",
              "clear",      std::move(rate),   "great speech quality"};
  l.gender = Gender::kFemale;
  l.style = Style::kAnger;
  l.config_version = std::string(kDefaultBinningVersion);
  return l;
}

TEST(Bleu, IdentityIsHundred) {
  const std::vector<TokenSequence> c = {SplitCommaTokens("a, b, c, d, e, f, g, h")};
  EXPECT_DOUBLE_EQ(CorpusBleu(c, c), 100.0);
}

TEST(Bleu, MatchesOracleWithOneTokenChanged) {
  const std::vector<TokenSequence> ref = {SplitCommaTokens("a, b, c, d, e, f, g, h")};
  const std::vector<TokenSequence> cand = {SplitCommaTokens("a, b, c, x, e, f, g, h")};
  const double got = CorpusBleu(cand, ref);
  EXPECT_NEAR(got, testing::OracleBleu(cand, ref), 1e-9);
  EXPECT_LT(got, 100.0);
  EXPECT_GT(got, 0.0);
}

TEST(Bleu, LengthMismatchThrows) {
  EXPECT_THROW(CorpusBleu({{"a"}}, {}), ValidationError);
}

TEST(IfBleu, AccuracyFourOfFive) {
  std::vector<AttributeLabels> refs(5, Labels("fast pace"));
  std::vector<AttributeLabels> cands = refs;
  cands[2] = Labels("slow pace");
  const auto acc = AttributeAccuracy(refs, cands);
  EXPECT_DOUBLE_EQ(acc.at("rate"), 80.0);
  EXPECT_DOUBLE_EQ(acc.at("pitch"), 100.0);
  EXPECT_DOUBLE_EQ(IfBleuFromLabels(refs, refs), 100.0);
}

TEST(IfBleu, ConfigVersionMismatch) {
  std::vector<AttributeLabels> refs = {Labels("fast pace")};
  std::vector<AttributeLabels> cands = refs;
  cands[0].config_version = "other";
  EXPECT_THROW(AttributeAccuracy(refs, cands), ConfigError);
}

TEST(CerWer, IdentityIsZero) {
  const ErrorRates r = CerWer({"नमस्ते दुनिया", "hello world"}, {"नमस्ते दुनिया", "hello world"});
  EXPECT_EQ(r.cer_pct, 0.0);
  EXPECT_EQ(r.wer_pct, 0.0);
}

TEST(CerWer, MatchesOracle) {
  const std::vector<std::string> refs = {
      "the cat sat",  "কেমন আছেন",   "a b c d",     "வணக்கம் நண்பா", "one two",
      "کتاب اچھی ہے", "quick brown", "x",           "मेरा नाम",      "last one here"};
  const std::vector<std::string> hyps = {
      "the bat sat",  "কেমন আছো",    "a c d",       "வணக்கம்",       "one two three",
      "کتاب ہے",      "quick brawn", "y",           "मेरा नाम",      "lost one"};
  std::size_t ce = 0, cn = 0, we = 0, wn = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto rc = testing::DecodeUtf8(refs[i]), hc = testing::DecodeUtf8(hyps[i]);
    ce += testing::OracleEditDistance(rc, hc);
    cn += rc.size();
    const auto rw = testing::SplitOnSpaces(refs[i]), hw = testing::SplitOnSpaces(hyps[i]);
    we += testing::OracleEditDistance(rw, hw);
    wn += rw.size();
  }
  const ErrorRates r = CerWer(refs, hyps);
  EXPECT_NEAR(r.cer_pct, 100.0 * ce / cn, 1e-9);
  EXPECT_NEAR(r.wer_pct, 100.0 * we / wn, 1e-9);
}

TEST(CerWer, EmptyReferenceExcluded) {
  const ErrorRates r = CerWer({"", "ab"}, {"x", "ab"});
  EXPECT_EQ(r.excluded, 1u);
  EXPECT_EQ(r.pairs, 1u);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Confusion, IdentityDiagonal) {
  const std::vector<std::string> classes = {"anger", "happy", "sad"};
  std::vector<Judgment> j;
  for (const auto& c : classes) j.push_back({c, c, 7});
  const ConfusionMatrix m = BuildConfusionMatrix(j, classes);
  for (const auto& a : classes)
    for (const auto& b : classes) EXPECT_DOUBLE_EQ(m.Percent(a, b), a == b ? 100.0 : 0.0);
}

TEST(Confusion, RowsSumToHundred) {
  const std::vector<std::string> classes = {"a", "b", "c"};
  const std::vector<Judgment> j = {{"a", "a", 1}, {"a", "b", 1}, {"a", "c", 1}};
  const ConfusionMatrix m = BuildConfusionMatrix(j, classes);
  EXPECT_NEAR(m.percent[0][0] + m.percent[0][1] + m.percent[0][2], 100.0, 1e-9);
  EXPECT_DOUBLE_EQ(m.percent[1][1], 0.0);
}

TEST(Confusion, UnknownLabelThrows) {
  const std::vector<Judgment> j = {{"a", "zzz", 1}};
  EXPECT_THROW(BuildConfusionMatrix(j, {"a"}), ValidationError);
}

TEST(Mushra, ConstantScoresHaveZeroWidth) {
  const std::vector<Rating> r = {{"s", "u1", "r1", 80}, {"s", "u2", "r1", 80}, {"s", "u3", "r1", 80}};
  const auto out = MushraAggregate(r);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_DOUBLE_EQ(out[0].mean, 80.0);
  EXPECT_DOUBLE_EQ(*out[0].half_width, 0.0);
}

TEST(Mushra, StudentT) {
  const std::vector<Rating> r = {{"s", "u1", "r1", 70}, {"s", "u2", "r1", 80}, {"s", "u3", "r1", 90}};
  const auto out = MushraAggregate(r);
  EXPECT_DOUBLE_EQ(out[0].mean, 80.0);
  EXPECT_NEAR(*out[0].half_width, 4.302653 * 10.0 / std::sqrt(3.0), 1e-4);
}

TEST(Mushra, SingleRatingHasNoWidthAndRangeChecked) {
  const std::vector<Rating> one = {{"s", "u", "r", 50}};
  EXPECT_FALSE(MushraAggregate(one)[0].half_width);
  const std::vector<Rating> bad = {{"s", "u", "r", 101}};
  EXPECT_THROW(MushraAggregate(bad), ValidationError);
}

TEST(Rounding, HalfEven) {
  EXPECT_DOUBLE_EQ(RoundHalfEven(0.125, 2), 0.12);
  EXPECT_DOUBLE_EQ(RoundHalfEven(0.135, 2), 0.14);
  EXPECT_DOUBLE_EQ(RoundHalfEven(2.5, 0), 2.0);
}

TEST(Report, JsonKeys) {
  EvaluationReport report;
  report.config_version = "v";
  report.if_bleu = 100.0;
  const auto j = report.ToJson();
  for (const char* key : {"config_version", "if_bleu", "per_attribute_accuracy", "cer_pct",
                          "wer_pct", "mos", "s_sim", "warnings", "evaluated", "missing_clips"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j.at("cer_pct").is_null());
  EXPECT_FALSE(j.contains("mushra"));
  EXPECT_FALSE(report.ToText().empty());
}

}  // namespace
}  // namespace speechdesc
