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

#ifndef SPEECHDESC_UTIL_UNICODE_H_
#define SPEECHDESC_UTIL_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace speechdesc {

// Code points of the NFC form of UTF-8 text. Ill-formed input is decoded
// with replacement characters.
std::vector<char32_t> NfcCodepoints(std::string_view utf8);

// NFC form, re-encoded as UTF-8.
std::string NfcUtf8(std::string_view utf8);

}  // namespace speechdesc

#endif  // SPEECHDESC_UTIL_UNICODE_H_
