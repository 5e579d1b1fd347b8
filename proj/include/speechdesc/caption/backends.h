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

#ifndef SPEECHDESC_CAPTION_BACKENDS_H_
#define SPEECHDESC_CAPTION_BACKENDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speechdesc/caption/caption.h"
#include "speechdesc/caption/grammar.h"
#include "speechdesc/types.h"

namespace speechdesc {

// Text completion service. Implementations throw BackendError on failure.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual std::string Complete(const std::string& prompt) = 0;
};

class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string Translate(const std::string& text,
                                const std::string& target_language) = 0;
  // True for a stub that returns its input unchanged.
  virtual bool passthrough() const { return false; }
};

struct HttpEndpoint {
  std::string url;  // http://host[:port]/path
  std::string token;
  int timeout_s = 30;

  // Reads <prefix>_URL and <prefix>_TOKEN, e.g. SPEECHDESC_LLM_URL.
  static std::optional<HttpEndpoint> FromEnvironment(std::string_view prefix);
};

// POSTs {"prompt": ...} and accepts {"text": ...} or
// {"choices": [{"text": ...}]}.
class HttpCompletionBackend : public CompletionBackend {
 public:
  explicit HttpCompletionBackend(HttpEndpoint endpoint);
  std::string Complete(const std::string& prompt) override;

 private:
  HttpEndpoint endpoint_;
};

// POSTs {"text": ..., "target_language": ...} and accepts {"text": ...} or
// {"translation": ...}.
class HttpTranslationBackend : public TranslationBackend {
 public:
  explicit HttpTranslationBackend(HttpEndpoint endpoint);
  std::string Translate(const std::string& text,
                        const std::string& target_language) override;

 private:
  HttpEndpoint endpoint_;
};

class PassthroughTranslator : public TranslationBackend {
 public:
  std::string Translate(const std::string& text, const std::string&) override {
    return text;
  }
  bool passthrough() const override { return true; }
};

// Absent on backend failure or an empty reply; the reason goes to *error.
std::optional<NativeCaption> TranslateCaption(const std::string& caption,
                                              const std::string& target_language,
                                              TranslationBackend& backend,
                                              std::string* error = nullptr);

// Fills {attributes} (one "name: value" line per label) in the template.
std::string RenderPrompt(std::string_view prompt_template,
                         const AttributeLabels& labels);

std::string DefaultPromptTemplate();

struct LlmOptions {
  double min_label_fraction = 0.8;
  int attempts = 2;
};

// Requests all three captions in one prompt and validates the descriptive
// caption with the parser. After the allowed attempts fail, falls back to the
// template generator; every rejection is appended to *log and CaptionSet::notes.
CaptionSet LlmGenerateCaptions(const AttributeLabels& labels,
                               CompletionBackend& backend,
                               std::string_view prompt_template,
                               const TemplateGrammar& grammar,
                               std::uint64_t seed,
                               const LlmOptions& options = {},
                               std::vector<std::string>* log = nullptr);

}  // namespace speechdesc

#endif  // SPEECHDESC_CAPTION_BACKENDS_H_
