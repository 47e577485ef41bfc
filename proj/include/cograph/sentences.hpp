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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cograph {

/// Whitespace-delimited tokens; punctuation stays attached to its word.
struct Sentence {
    std::string text;
    std::vector<std::string> tokens;
};

struct SplitOptions {
    /// Sentences with more tokens than this are dropped as run-ons.
    std::size_t max_sentence_tokens = 60;
};

struct SplitResult {
    std::vector<Sentence> sentences;
    std::size_t discarded = 0;
};

/// True for tokens like "Mr.", "U.S." or a single initial "W." whose final
/// period does not end a sentence.
[[nodiscard]] bool is_abbreviation(std::string_view token);

/// Rule-based splitter. Boundaries: every line break, and a token ending in
/// `.`, `!` or `?` (optionally followed by closing quotes or brackets) when
/// the next token starts with an upper-case letter or a digit and the token
/// is not an abbreviation.
[[nodiscard]] SplitResult split_sentences(std::string_view text, const SplitOptions& options = {});

}  // namespace cograph
