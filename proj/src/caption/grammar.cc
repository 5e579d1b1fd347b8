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

#include "speechdesc/caption/grammar.h"

#include <cctype>
#include <fstream>
#include <set>

#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using nlohmann::json;

PhraseSet P(std::vector<std::string> long_forms,
            std::vector<std::string> short_forms,
            std::vector<std::string> aliases = {}) {
  return {std::move(long_forms), std::move(short_forms), std::move(aliases)};
}

bool IsLowerCase(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isupper(c)) return false;
  }
  return true;
}

json PhraseSetToJson(const PhraseSet& p) {
  json j = {{"long", p.long_forms}, {"short", p.short_forms}};
  if (!p.aliases.empty()) j["aliases"] = p.aliases;
  return j;
}

PhraseSet PhraseSetFromJson(const json& j) {
  PhraseSet p;
  p.long_forms = j.at("long").get<std::vector<std::string>>();
  p.short_forms = j.at("short").get<std::vector<std::string>>();
  if (j.contains("aliases")) {
    p.aliases = j.at("aliases").get<std::vector<std::string>>();
  }
  return p;
}

}  // namespace

TemplateGrammar TemplateGrammar::Default() {
  TemplateGrammar g;
  g.version = "grammar-v1";

  g.labels["pitch"]["very low pitch"] = P({"very low-pitched", "very deep"},
                                          {"very low", "extremely deep"});
  g.labels["pitch"]["low pitch"] = P({"low-pitched", "deep"}, {"low", "fairly deep"});
  g.labels["pitch"]["moderate pitch"] = P({"moderately pitched", "medium-pitched"},
                                          {"moderate", "mid-range"});
  g.labels["pitch"]["high pitch"] = P({"high-pitched", "rather high"}, {"high", "fairly high"});
  g.labels["pitch"]["very high pitch"] = P({"very high-pitched", "piercingly high"},
                                           {"very high", "extremely high"});

  g.labels["pitch_variation"]["monotone"] = P({"monotone delivery", "flat, monotonous intonation"},
                           {"monotone", "flat"});
  g.labels["pitch_variation"]["expressive tone"] = P({"expressive tone", "animated, varied intonation"},
                                  {"expressive", "lively"});

  g.labels["reverb"]["very distant sounding"] =
      P({"a cavernous, strongly echoing space", "a very distant-sounding, reverberant hall"},
        {"a very distant room", "a cavernous space"});
  g.labels["reverb"]["distant sounding"] =
      P({"a noticeably echoing room", "a distant-sounding, reverberant room"},
        {"a distant room", "an echoey room"});
  g.labels["reverb"]["slightly distant sounding"] =
      P({"a mildly echoing room", "a slightly distant-sounding space"},
        {"a slightly distant room", "a mildly echoey room"});
  g.labels["reverb"]["slightly close sounding"] =
      P({"a slightly roomy environment", "a moderately reverberant environment"},
        {"a slightly enclosed environment", "a fairly close room"});
  g.labels["reverb"]["very close sounding"] =
      P({"a very close-sounding, dry space", "an intimate, acoustically dry booth"},
        {"a very close setting", "a dry booth"});

  g.labels["snr"]["very noisy"] = P(
      {"buried in heavy background noise", "marred by very loud background noise"},
      {"very noisy", "heavy noise"});
  g.labels["snr"]["noisy"] = P(
      {"affected by clearly audible background noise", "noisy throughout"},
      {"noisy", "audible noise"});
  g.labels["snr"]["slightly noisy"] = P(
      {"touched by slight background noise", "slightly noisy in the background"},
      {"slightly noisy", "faint noise"});
  g.labels["snr"]["clear"] = P(
      {"clear with little background noise", "clean and mostly free of noise"},
      {"clear", "clean audio"});
  g.labels["snr"]["very clear"] = P(
      {"crystal clear with no audible noise", "exceptionally clean and noise-free"},
      {"very clear", "crystal clear"});

  g.labels["rate"]["slow pace"] = P({"a slow, unhurried pace", "a leisurely, slow pace"},
                            {"a slow pace", "an unhurried pace"}, {"slow speaker"});
  g.labels["rate"]["slightly slow pace"] = P({"a slightly slow pace", "a somewhat relaxed pace"},
                                     {"a slightly slow rate", "a relaxed rate"});
  g.labels["rate"]["moderate pace"] = P({"a moderate, even pace", "a steady, moderate pace"},
                                {"a moderate pace", "an even rate"});
  g.labels["rate"]["slightly fast pace"] = P({"a slightly fast pace", "a somewhat brisk pace"},
                                     {"a slightly quick pace", "a brisk rate"});
  g.labels["rate"]["fast pace"] = P({"a fast, rapid pace", "a quick, hurried pace"},
                            {"a fast pace", "a rapid rate"}, {"fast speaker"});

  g.labels["quality"]["poor speech quality"] =
      P({"poor overall speech quality", "low, degraded audio fidelity"},
        {"poor quality", "degraded audio"});
  g.labels["quality"]["moderate speech quality"] =
      P({"moderate overall speech quality", "passable, middling audio fidelity"},
        {"moderate quality", "middling audio"});
  g.labels["quality"]["good speech quality"] =
      P({"good overall speech quality", "solid, good audio fidelity"},
        {"good quality", "solid audio"});
  g.labels["quality"]["great speech quality"] =
      P({"excellent overall speech quality", "superb, pristine audio fidelity"},
        {"excellent quality", "exceptional quality"});

  g.gender[Gender::kFemale] = {"female speaker", "woman"};
  g.gender[Gender::kMale] = {"male speaker", "man"};
  g.gender[Gender::kUnspecified] = {"speaker of unspecified gender", "person"};

  g.age[AgeGroup::kChild] = {"child-aged", "childlike"};
  g.age[AgeGroup::kYoung] = {"young", "youthful"};
  g.age[AgeGroup::kMiddleAged] = {"middle-aged", "mature"};
  g.age[AgeGroup::kElderly] = {"elderly", "older"};

  g.style[Style::kNeutral] =
      P({"the intended style is neutral", "the delivery stays emotionally neutral"},
        {"a neutral tone", "a calm, even tone"});
  g.style[Style::kAnger] =
      P({"the intended style is anger", "the delivery carries an angry tone"},
        {"an angry tone", "a furious edge"});
  g.style[Style::kDisgust] =
      P({"the intended style is disgust", "the delivery conveys clear disgust"},
        {"a disgusted tone", "a tone of revulsion"});
  g.style[Style::kFear] =
      P({"the intended style is fear", "the delivery sounds fearful and anxious"},
        {"a fearful tone", "an anxious edge"});
  g.style[Style::kHappy] =
      P({"the intended style is happiness", "the delivery sounds cheerful and happy"},
        {"a happy tone", "a cheerful lilt"});
  g.style[Style::kSad] =
      P({"the intended style is sadness", "the delivery sounds sorrowful and sad"},
        {"a sad tone", "a sorrowful air"});
  g.style[Style::kSurprise] =
      P({"the intended style is surprise", "the delivery sounds astonished"},
        {"a surprised tone", "an astonished air"});
  g.style[Style::kNews] =
      P({"the intended style is news reading", "the delivery resembles a news broadcast"},
        {"a newsreader tone", "a broadcast style"});
  g.style[Style::kConversational] =
      P({"the intended style is conversational",
         "the delivery is casual and conversational"},
        {"a conversational tone", "a chatty manner"});
  g.style[Style::kDigitalCommand] =
      P({"the intended style is a digital command",
         "the delivery sounds like a voice-assistant command"},
        {"a command-like tone", "a voice-command style"});
  g.style[Style::kUnspecified] =
      P({"no particular speaking style is intended",
         "the speaking style is unspecified"},
        {"no set style", "an unstyled delivery"});

  g.descriptive_skeletons = {
      "{opening} delivers speech in {reverb} with a {pitch}, {pitch_variation}. "
      "{Pronoun} speak{s} at {rate}, with {quality}. The recording is {snr}. "
      "{Style}.",
      "{opening} talks in {reverb}, using a {pitch} voice with {pitch_variation}. "
      "The audio is {snr}, and {pronoun} keep{s} {rate} with {quality}. {Style}.",
  };
  g.concise_skeletons = {
      "{opening} delivers {pitch}, {pitch_variation} speech in {reverb}, {snr}, "
      "at {rate}, with {quality} and {style}.",
      "{opening_bare}: {pitch}, {pitch_variation}, {reverb}, {snr}, {rate}, "
      "{quality}, {style}.",
  };
  g.robust_skeletons = {
      "{opening} speaks {fragments}. {Style}.",
      "{opening} is heard {fragments}. {Style}.",
  };
  g.robust_fragments = {
      {"pitch", "in a {pitch} voice"},
      {"pitch_variation", "with {pitch_variation}"},
      {"reverb", "in {reverb}"},
      {"snr", "on a recording that is {snr}"},
      {"rate", "at {rate}"},
      {"quality", "with {quality}"},
  };
  return g;
}

const PhraseSet* TemplateGrammar::Find(BinnedAttribute attribute,
                                       std::string_view label) const {
  auto it = labels.find(ToString(attribute));
  if (it == labels.end()) return nullptr;
  auto lit = it->second.find(label);
  return lit == it->second.end() ? nullptr : &lit->second;
}

json TemplateGrammar::ToJson() const {
  json j;
  j["version"] = version;
  json lj = json::object();
  for (const auto& [attribute, inventory] : labels) {
    json ij = json::object();
    for (const auto& [label, phrases] : inventory) ij[label] = PhraseSetToJson(phrases);
    lj[attribute] = ij;
  }
  j["labels"] = lj;
  json gj = json::object();
  for (const auto& [g, phrases] : gender) gj[std::string(ToString(g))] = phrases;
  j["gender"] = gj;
  json aj = json::object();
  for (const auto& [a, phrases] : age) aj[std::string(ToString(a))] = phrases;
  j["age"] = aj;
  json sj = json::object();
  for (const auto& [s, phrases] : style) {
    sj[std::string(ToString(s))] = PhraseSetToJson(phrases);
  }
  j["style"] = sj;
  j["skeletons"] = {{"descriptive", descriptive_skeletons},
                    {"concise", concise_skeletons},
                    {"robust", robust_skeletons}};
  j["robust_fragments"] = robust_fragments;
  return j;
}

TemplateGrammar TemplateGrammar::FromJson(const json& j) {
  TemplateGrammar g;
  try {
    g.version = j.at("version").get<std::string>();
    for (const auto& [attribute, inventory] : j.at("labels").items()) {
      if (!ParseBinnedAttribute(attribute)) {
        throw ConfigError("grammar: unknown attribute " + attribute);
      }
      for (const auto& [label, value] : inventory.items()) {
        g.labels[attribute][label] = PhraseSetFromJson(value);
      }
    }
    for (const auto& [key, value] : j.at("gender").items()) {
      auto gender = ParseGender(key);
      if (!gender) throw ConfigError("grammar: unknown gender " + key);
      g.gender[*gender] = value.get<std::vector<std::string>>();
    }
    for (const auto& [key, value] : j.at("age").items()) {
      auto age = ParseAgeGroup(key);
      if (!age) throw ConfigError("grammar: unknown age group " + key);
      g.age[*age] = value.get<std::vector<std::string>>();
    }
    for (const auto& [key, value] : j.at("style").items()) {
      auto style = ParseStyle(key);
      if (!style) throw ConfigError("grammar: unknown style " + key);
      g.style[*style] = PhraseSetFromJson(value);
    }
    const json& sk = j.at("skeletons");
    g.descriptive_skeletons = sk.at("descriptive").get<std::vector<std::string>>();
    g.concise_skeletons = sk.at("concise").get<std::vector<std::string>>();
    g.robust_skeletons = sk.at("robust").get<std::vector<std::string>>();
    g.robust_fragments =
        j.at("robust_fragments").get<std::map<std::string, std::string, std::less<>>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("grammar: ") + e.what());
  }
  return g;
}

TemplateGrammar TemplateGrammar::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grammar " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("grammar " + path.string() + ": " + e.what());
  }
  return FromJson(j);
}

void TemplateGrammar::Validate(const BinningConfig& config) const {
  std::map<std::string, std::string> owner;
  auto claim = [&owner](const std::string& phrase, const std::string& who) {
    if (phrase.empty() || !IsLowerCase(phrase)) {
      throw ConfigError("grammar: phrasing '" + phrase + "' of " + who +
                        " must be non-empty lower case");
    }
    auto [it, inserted] = owner.emplace(phrase, who);
    if (!inserted && it->second != who) {
      throw ConfigError("grammar: phrasing '" + phrase + "' is shared by " +
                        it->second + " and " + who);
    }
  };
  auto check_set = [&claim](const PhraseSet& p, const std::string& who) {
    if (p.long_forms.size() < 2 || p.short_forms.size() < 2) {
      throw ConfigError("grammar: " + who + " needs two long and two short phrasings");
    }
    for (const auto* list : {&p.long_forms, &p.short_forms, &p.aliases}) {
      for (const std::string& phrase : *list) claim(phrase, who);
    }
  };

  for (BinnedAttribute a : kAllBinnedAttributes) {
    for (const std::string& label : config.Vocabulary(a)) {
      const PhraseSet* phrases = Find(a, label);
      if (phrases == nullptr) {
        throw ConfigError("grammar: no phrasing for label '" + label + "'");
      }
      check_set(*phrases, "label '" + label + "'");
    }
    if (!robust_fragments.contains(ToString(a))) {
      throw ConfigError("grammar: no robust fragment for " + std::string(ToString(a)));
    }
  }
  for (Gender g : kAllGenders) {
    auto it = gender.find(g);
    if (it == gender.end() || it->second.size() < 2) {
      throw ConfigError("grammar: gender " + std::string(ToString(g)) +
                        " needs two phrasings");
    }
    for (const std::string& phrase : it->second) {
      claim(phrase, "gender " + std::string(ToString(g)));
    }
  }
  for (AgeGroup a : kAllAgeGroups) {
    if (a == AgeGroup::kUnspecified) continue;
    auto it = age.find(a);
    if (it == age.end() || it->second.size() < 2) {
      throw ConfigError("grammar: age group " + std::string(ToString(a)) +
                        " needs two phrasings");
    }
    for (const std::string& phrase : it->second) {
      claim(phrase, "age group " + std::string(ToString(a)));
    }
  }
  for (Style s : kAllStyles) {
    auto it = style.find(s);
    if (it == style.end()) {
      throw ConfigError("grammar: no phrasing for style " + std::string(ToString(s)));
    }
    check_set(it->second, "style " + std::string(ToString(s)));
  }
  if (descriptive_skeletons.empty() || concise_skeletons.empty() ||
      robust_skeletons.empty()) {
    throw ConfigError("grammar: every caption style needs a skeleton");
  }
  for (const auto* list : {&descriptive_skeletons, &concise_skeletons}) {
    for (const std::string& sk : *list) {
      for (BinnedAttribute a : kAllBinnedAttributes) {
        if (sk.find("{" + std::string(ToString(a)) + "}") == std::string::npos) {
          throw ConfigError("grammar: skeleton lacks {" + std::string(ToString(a)) +
                            "}: " + sk);
        }
      }
    }
  }
  for (const std::string& sk : robust_skeletons) {
    if (sk.find("{fragments}") == std::string::npos) {
      throw ConfigError("grammar: robust skeleton lacks {fragments}: " + sk);
    }
  }
}

}  // namespace speechdesc
