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

#ifndef SPEECHDESC_UTIL_HASH_H_
#define SPEECHDESC_UTIL_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace speechdesc {

// 64-bit FNV-1a. Stable across platforms and runs, so it is safe to persist.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

// Lower-case, zero-padded 16 digit hex.
std::string HexDigest(std::uint64_t value);

// Per-item seed that depends only on the run seed and the item key.
std::uint64_t DeriveSeed(std::uint64_t run_seed, std::string_view key);

}  // namespace speechdesc

#endif  // SPEECHDESC_UTIL_HASH_H_
