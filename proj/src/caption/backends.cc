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

#include "speechdesc/caption/backends.h"

#include <cstdlib>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "speechdesc/errors.h"

namespace speechdesc {
namespace {

using nlohmann::json;

struct ParsedUrl {
  std::string origin;  // scheme://host:port
  std::string path;
};

ParsedUrl SplitUrl(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.substr(0, scheme_end) != "http") {
    throw BackendError("unsupported endpoint url '" + url + "' (http only)");
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  ParsedUrl parsed;
  parsed.origin = url.substr(0, path_start);
  parsed.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  return parsed;
}

json PostJson(const HttpEndpoint& endpoint, const json& body) {
  const ParsedUrl url = SplitUrl(endpoint.url);
  httplib::Client client(url.origin);
  client.set_connection_timeout(endpoint.timeout_s, 0);
  client.set_read_timeout(endpoint.timeout_s, 0);
  client.set_write_timeout(endpoint.timeout_s, 0);
  httplib::Headers headers;
  if (!endpoint.token.empty()) {
    headers.emplace("Authorization", "Bearer " + endpoint.token);
  }
  auto response = client.Post(url.path, headers, body.dump(), "application/json");
  if (!response) {
    throw BackendError("request to " + endpoint.url + " failed: " +
                       httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw BackendError("request to " + endpoint.url + " returned status " +
                       std::to_string(response->status));
  }
  try {
    return json::parse(response->body);
  } catch (const json::exception& e) {
    throw BackendError("malformed reply from " + endpoint.url + ": " + e.what());
  }
}

std::string Trim(std::string_view s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

struct LlmReply {
  std::string descriptive;
  std::string concise;
  std::string robust;
};

LlmReply ParseReply(const std::string& reply) {
  LlmReply out;
  std::istringstream in(reply);
  std::string line;
  std::string* current = nullptr;
  while (std::getline(in, line)) {
    const std::string t = Trim(line);
    auto take = [&](std::string_view prefix, std::string* target) {
      if (t.size() >= prefix.size() && t.compare(0, prefix.size(), prefix) == 0) {
        *target = Trim(std::string_view(t).substr(prefix.size()));
        current = target;
        return true;
      }
      return false;
    };
    if (take("Descriptive:", &out.descriptive) || take("Concise:", &out.concise) ||
        take("Attribute-Robust:", &out.robust)) {
      continue;
    }
    if (current != nullptr && !t.empty()) *current += " " + t;
  }
  return out;
}

}  // namespace

std::optional<HttpEndpoint> HttpEndpoint::FromEnvironment(std::string_view prefix) {
  const std::string url_var = std::string(prefix) + "_URL";
  const char* url = std::getenv(url_var.c_str());
  if (url == nullptr || *url == '\0') return std::nullopt;
  HttpEndpoint endpoint;
  endpoint.url = url;
  const std::string token_var = std::string(prefix) + "_TOKEN";
  if (const char* token = std::getenv(token_var.c_str())) endpoint.token = token;
  return endpoint;
}

HttpCompletionBackend::HttpCompletionBackend(HttpEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {}

std::string HttpCompletionBackend::Complete(const std::string& prompt) {
  const json reply = PostJson(endpoint_, {{"prompt", prompt}});
  if (reply.contains("text") && reply["text"].is_string()) {
    return reply["text"].get<std::string>();
  }
  if (reply.contains("choices") && reply["choices"].is_array() &&
      !reply["choices"].empty() && reply["choices"][0].contains("text")) {
    return reply["choices"][0]["text"].get<std::string>();
  }
  throw BackendError("completion reply has no text field");
}

HttpTranslationBackend::HttpTranslationBackend(HttpEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {}

std::string HttpTranslationBackend::Translate(const std::string& text,
                                              const std::string& target_language) {
  const json reply =
      PostJson(endpoint_, {{"text", text}, {"target_language", target_language}});
  for (const char* key : {"text", "translation"}) {
    if (reply.contains(key) && reply[key].is_string()) {
      return reply[key].get<std::string>();
    }
  }
  throw BackendError("translation reply has no text field");
}

std::optional<NativeCaption> TranslateCaption(const std::string& caption,
                                              const std::string& target_language,
                                              TranslationBackend& backend,
                                              std::string* error) {
  std::string translated;
  try {
    translated = backend.Translate(caption, target_language);
  } catch (const std::exception& e) {
    if (error != nullptr) *error = std::string("translation failed: ") + e.what();
    return std::nullopt;
  }
  if (translated.empty()) {
    if (error != nullptr) *error = "translation failed: empty reply";
    return std::nullopt;
  }
  NativeCaption native;
  native.text = std::move(translated);
  native.language = target_language;
  native.untranslated = backend.passthrough();
  return native;
}

std::string RenderPrompt(std::string_view prompt_template,
                         const AttributeLabels& labels) {
  std::string attributes;
  auto line = [&attributes](std::string_view name, std::string_view value) {
    attributes += std::string(name) + ": " + std::string(value) + "\n";
  };
  if (labels.speaker_name) line("name", *labels.speaker_name);
  line("gender", ToString(labels.gender));
  if (labels.age_group != AgeGroup::kUnspecified) line("age", ToString(labels.age_group));
  if (labels.accent) line("accent", *labels.accent);
  for (BinnedAttribute a : kAllBinnedAttributes) line(ToString(a), labels.label(a));
  line("style", ToString(labels.style));
  for (const std::string& tag : labels.env_tags) line("environment", tag);

  std::string prompt(prompt_template);
  const std::string key = "{attributes}";
  if (std::size_t pos = prompt.find(key); pos != std::string::npos) {
    prompt.replace(pos, key.size(), attributes);
  } else {
    prompt += "\n" + attributes;
  }
  return prompt;
}

std::string DefaultPromptTemplate() {
  return "You write text descriptions of speech recordings for a text-to-speech "
         "system.\n"
         "Attributes:\n{attributes}\n"
         "Write three descriptions. Reply with exactly three lines:\n"
         "Descriptive: a detailed description that mentions every attribute.\n"
         "Concise: a brief description that still mentions every attribute.\n"
         "Attribute-Robust: a description that leaves out some attributes but "
         "keeps the speaker, gender and style.\n";
}

CaptionSet LlmGenerateCaptions(const AttributeLabels& labels,
                               CompletionBackend& backend,
                               std::string_view prompt_template,
                               const TemplateGrammar& grammar, std::uint64_t seed,
                               const LlmOptions& options,
                               std::vector<std::string>* log) {
  const CaptionParser parser(grammar);
  const std::string prompt = RenderPrompt(prompt_template, labels);
  const double needed =
      options.min_label_fraction * static_cast<double>(PartialLabels::MentionableCount(labels));
  std::vector<std::string> notes;
  auto reject = [&](const std::string& why) {
    notes.push_back("llm_rejected: " + why);
    if (log != nullptr) log->push_back("llm_rejected: " + why);
  };

  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    std::string reply;
    try {
      reply = backend.Complete(prompt);
    } catch (const std::exception& e) {
      reject(std::string("backend error: ") + e.what());
      break;
    }
    const LlmReply parsed = ParseReply(reply);
    if (parsed.descriptive.empty() || parsed.concise.empty() || parsed.robust.empty()) {
      reject("reply lacks one of the three captions");
      continue;
    }
    const std::size_t matched = parser.Parse(parsed.descriptive).MatchingCount(labels);
    if (static_cast<double>(matched) < needed) {
      reject("descriptive caption mentions " + std::to_string(matched) + " of " +
             std::to_string(PartialLabels::MentionableCount(labels)) + " labels");
      continue;
    }
    CaptionSet captions;
    captions.descriptive = parsed.descriptive;
    captions.concise = parsed.concise;
    captions.attribute_robust = parsed.robust;
    captions.generator = CaptionGenerator::kLlmBackend;
    captions.rng_seed = seed;
    captions.robust_retained = parser.Parse(parsed.robust).PresentAttributes();
    captions.notes = std::move(notes);
    return captions;
  }
  CaptionSet fallback = GenerateCaptions(labels, grammar, seed);
  notes.push_back("llm_fallback: template generator used");
  if (log != nullptr) log->push_back("llm_fallback: template generator used");
  fallback.notes = std::move(notes);
  return fallback;
}

}  // namespace speechdesc
