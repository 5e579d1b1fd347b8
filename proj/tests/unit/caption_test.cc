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

#include <algorithm>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"
#include "json.hpp"
#include "speechdesc/binning/binning.h"
#include "speechdesc/caption/backends.h"
#include "speechdesc/caption/caption.h"
#include "speechdesc/caption/grammar.h"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

AttributeLabels JayaLabels() {
  AttributeLabels l;
  l.binned = {"high pitch",   "expressive tone",    "slightly close sounding",
              "clear",        "slightly fast pace", "great speech quality"};
  l.gender = Gender::kFemale;
  l.style = Style::kAnger;
  l.speaker_name = "Jaya";
  l.config_version = std::string(kDefaultBinningVersion);
  return l;
}

class CaptionTest : public ::testing::Test {
 protected:
  const TemplateGrammar grammar_ = TemplateGrammar::Default();
  const CaptionParser parser_{grammar_};
};

TEST_F(CaptionTest, GrammarValidates) {
  EXPECT_NO_THROW(grammar_.Validate(BinningConfig::Default()));
  EXPECT_EQ(TemplateGrammar::FromJson(grammar_.ToJson()), grammar_);
}

TEST_F(CaptionTest, GrammarRejectsSharedPhrasing) {
  TemplateGrammar g = grammar_;
  g.labels["snr"]["clear"].long_forms[0] = g.labels["snr"]["noisy"].long_forms[0];
  EXPECT_THROW(g.Validate(BinningConfig::Default()), ConfigError);
}

TEST_F(CaptionTest, JayaDescriptive) {
  const AttributeLabels labels = JayaLabels();
  bool seen_reference_wording = false;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CaptionSet c = GenerateCaptions(labels, grammar_, seed);
    if (c.descriptive.rfind("Jaya, a female speaker, delivers speech in a slightly roomy "
                            "environment with a high-pitched, expressive tone.",
                            0) == 0) {
      seen_reference_wording = true;
    }
    EXPECT_TRUE(parser_.Parse(c.descriptive).Recovers(labels)) << c.descriptive;
  }
  EXPECT_TRUE(seen_reference_wording);
}

TEST_F(CaptionTest, Deterministic) {
  EXPECT_EQ(GenerateCaptions(JayaLabels(), grammar_, 99),
            GenerateCaptions(JayaLabels(), grammar_, 99));
}

TEST_F(CaptionTest, RobustDropoutSweep) {
  AttributeLabels labels = JayaLabels();
  labels.age_group = AgeGroup::kYoung;
  labels.accent = "Tamil";
  labels.env_tags = {"street"};
  std::map<std::string, int> kept;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const CaptionSet c = GenerateCaptions(labels, grammar_, seed);
    const PartialLabels r = parser_.Parse(c.attribute_robust);
    ASSERT_EQ(r.gender, labels.gender);
    ASSERT_EQ(r.style, labels.style);
    const auto present = r.PresentAttributes();
    ASSERT_EQ(std::set<std::string>(present.begin(), present.end()),
              std::set<std::string>(c.robust_retained.begin(), c.robust_retained.end()))
        << c.attribute_robust;
    for (const auto& a : present) ++kept[a];
  }
  std::vector<std::string> optional = {kAgeField, kAccentField, kEnvField};
  for (BinnedAttribute a : kAllBinnedAttributes) optional.emplace_back(ToString(a));
  for (const auto& a : optional) {
    EXPECT_GT(kept[a], 0) << a;
    EXPECT_LT(kept[a], 1000) << a;
  }
}

TEST_F(CaptionTest, ConciseIsShorter) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CaptionSet c = GenerateCaptions(JayaLabels(), grammar_, seed);
    EXPECT_LE(c.concise.size() * 5, c.descriptive.size() * 3);
  }
}

TEST_F(CaptionTest, FreeTextPartialParse) {
  const PartialLabels p = parser_.Parse("a fast speaker");
  EXPECT_EQ(p.PresentAttributes(), std::vector<std::string>{"rate"});
  EXPECT_EQ(p.binned[static_cast<std::size_t>(BinnedAttribute::kRate)], "fast pace");
  EXPECT_FALSE(parser_.Parse("nothing to see").warnings.empty());
}

TEST_F(CaptionTest, UnrenderableNameIsAnError) {
  AttributeLabels labels = JayaLabels();
  labels.speaker_name = "Smith, John";
  EXPECT_THROW(GenerateCaptions(labels, grammar_, 1), GenerationError);
}

TEST(Translate, Passthrough) {
  PassthroughTranslator stub;
  const auto native = TranslateCaption("A woman speaks.", "hin", stub);
  ASSERT_TRUE(native);
  EXPECT_EQ(native->text, "A woman speaks.");
  EXPECT_TRUE(native->untranslated);
}

class Reverser : public TranslationBackend {
 public:
  std::string Translate(const std::string& text, const std::string&) override {
    return std::string(text.rbegin(), text.rend());
  }
};

class Empty : public TranslationBackend {
 public:
  std::string Translate(const std::string&, const std::string&) override { return ""; }
};

TEST(Translate, AdapterFidelityAndEmptyReply) {
  Reverser reverse;
  const auto native = TranslateCaption("abc", "tam", reverse);
  ASSERT_TRUE(native);
  EXPECT_EQ(native->text, "cba");
  EXPECT_FALSE(native->untranslated);
  Empty empty;
  std::string error;
  EXPECT_FALSE(TranslateCaption("abc", "tam", empty, &error));
  EXPECT_FALSE(error.empty());
}

// Serves canned replies on a loopback port for the lifetime of the object.
class MockServer {
 public:
  explicit MockServer(std::function<std::string(const nlohmann::json&)> reply) {
    server_.Post(".*", [reply](const httplib::Request& req, httplib::Response& res) {
      res.set_content(reply(nlohmann::json::parse(req.body)), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockServer() {
    server_.stop();
    thread_.join();
  }
  HttpEndpoint endpoint(const std::string& path) const {
    return {"http://127.0.0.1:" + std::to_string(port_) + path, "token", 5};
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(Llm, AcceptsGrammarCaption) {
  const TemplateGrammar grammar = TemplateGrammar::Default();
  const AttributeLabels labels = JayaLabels();
  const CaptionSet reference = GenerateCaptions(labels, grammar, 5);
  MockServer server([&](const nlohmann::json& body) {
    EXPECT_NE(body.at("prompt").get<std::string>().find("gender: female"), std::string::npos);
    return nlohmann::json{{"text", "Descriptive: " + reference.descriptive +
                                       "\nConcise: " + reference.concise +
                                       "\nAttribute-Robust: " + reference.attribute_robust}}
        .dump();
  });
  HttpCompletionBackend backend(server.endpoint("/v1/complete"));
  const CaptionSet c = LlmGenerateCaptions(labels, backend, DefaultPromptTemplate(), grammar, 5);
  EXPECT_EQ(c.generator, CaptionGenerator::kLlmBackend);
  EXPECT_EQ(c.descriptive, reference.descriptive);
}

TEST(Llm, RejectsUnrelatedText) {
  const TemplateGrammar grammar = TemplateGrammar::Default();
  MockServer server([](const nlohmann::json&) {
    return nlohmann::json{{"choices", {{{"text", "hello"}}}}}.dump();
  });
  HttpCompletionBackend backend(server.endpoint("/complete"));
  const CaptionSet c =
      LlmGenerateCaptions(JayaLabels(), backend, DefaultPromptTemplate(), grammar, 5);
  EXPECT_EQ(c.generator, CaptionGenerator::kTemplate);
  EXPECT_EQ(c, [&] {
    CaptionSet t = GenerateCaptions(JayaLabels(), grammar, 5);
    t.notes = c.notes;
    return t;
  }());
  EXPECT_NE(std::find(c.notes.begin(), c.notes.end(), "llm_fallback: template generator used"),
            c.notes.end());
}

TEST(Llm, EndpointDownFallsBackAndLogs) {
  HttpCompletionBackend backend({"http://127.0.0.1:1/complete", "", 1});
  std::vector<std::string> log;
  const CaptionSet c = LlmGenerateCaptions(JayaLabels(), backend, DefaultPromptTemplate(),
                                           TemplateGrammar::Default(), 5, {}, &log);
  EXPECT_EQ(c.generator, CaptionGenerator::kTemplate);
  ASSERT_FALSE(log.empty());
  EXPECT_NE(log.front().find("backend error"), std::string::npos);
}

TEST(Llm, HttpTranslation) {
  MockServer server([](const nlohmann::json& body) {
    return nlohmann::json{{"translation", "[" + body.at("target_language").get<std::string>() +
                                             "] " + body.at("text").get<std::string>()}}
        .dump();
  });
  HttpTranslationBackend backend(server.endpoint("/translate"));
  const auto native = TranslateCaption("hi", "ben", backend);
  ASSERT_TRUE(native);
  EXPECT_EQ(native->text, "[ben] hi");
}

TEST(Llm, HttpsIsRefused) {
  HttpCompletionBackend backend({"https://example.invalid/x", "", 1});
  EXPECT_THROW(backend.Complete("x"), BackendError);
}

}  // namespace
}  // namespace speechdesc
