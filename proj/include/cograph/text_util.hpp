// Copyright 2026 The Cograph Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cograph {

[[nodiscard]] constexpr bool is_ascii_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

[[nodiscard]] std::string_view trim_ascii(std::string_view s) noexcept;
[[nodiscard]] std::string_view trim_line_ending(std::string_view s) noexcept;
[[nodiscard]] std::string ascii_lower(std::string_view s);
[[nodiscard]] bool istarts_with(std::string_view s, std::string_view prefix) noexcept;

/// Splits on runs of ASCII whitespace; no empty pieces.
[[nodiscard]] std::vector<std::string_view> split_whitespace(std::string_view s);

/// Collapses whitespace runs to one space and trims both ends.
[[nodiscard]] std::string normalize_spaces(std::string_view s);

void append_utf8(std::string& out, char32_t cp);

/// Copies `bytes`, replacing every ill-formed UTF-8 sequence with U+FFFD.
[[nodiscard]] std::string sanitize_utf8(std::string_view bytes);

/// Decodes `bytes` in the named charset into UTF-8. Unknown charsets fall
/// back to lossy UTF-8.
[[nodiscard]] std::string decode_charset(std::string_view bytes, std::string_view charset);

}  // namespace cograph
