// Copyright 2026 The parsig-nlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace parsig::utf8 {

/// Byte length of the sequence introduced by lead byte `c` (1 for invalid
/// leads, so malformed input is walked byte by byte instead of rejected).
std::size_t sequenceLength(unsigned char c);

/// Splits into code-point substrings, e.g. "ān" -> {"ā", "n"}.
std::vector<std::string> chars(std::string_view s);

std::size_t length(std::string_view s);

char32_t decode(std::string_view s, std::size_t offset = 0);
std::string encode(char32_t cp);

bool isSpace(char32_t cp);
bool isPunct(char32_t cp);

/// First/last `n` code points (whole string when shorter).
std::string prefix(std::string_view s, std::size_t n);
std::string suffix(std::string_view s, std::size_t n);

bool endsWith(std::string_view s, std::string_view tail);

}  // namespace parsig::utf8
