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
#include <span>
#include <string>
#include <vector>

#include "cograph/dictionary.hpp"
#include "cograph/page_text.hpp"
#include "cograph/record.hpp"
#include "cograph/sentences.hpp"

namespace cograph {

/// Longest pattern (in tokens) allowed between two co-mentioned persons.
inline constexpr std::size_t kMaxPatternTokens = 3;

struct Mention {
    std::string name;   ///< dictionary surface form
    std::size_t start;  ///< token span [start, end) within the sentence
    std::size_t end;

    friend bool operator==(const Mention&, const Mention&) = default;
};

struct RecordContext {
    std::string url;
    Timestamp crawl_date{};
};

/// Leftmost-longest, non-overlapping dictionary matches in sentence order.
[[nodiscard]] std::vector<Mention> find_mentions(const Sentence& sentence, const PersonDictionary& dict);

/// One record per consecutive mention pair separated by at most
/// kMaxPatternTokens tokens and carrying different names. Every record from
/// the sentence shares n_persons = number of distinct names mentioned.
[[nodiscard]] std::vector<CoMentionRecord> extract_records(const Sentence& sentence,
                                                           std::span<const Mention> mentions,
                                                           const RecordContext& context);

struct PageExtraction {
    std::vector<CoMentionRecord> records;
    std::size_t sentences = 0;
    std::size_t discarded_sentences = 0;
};

/// split_sentences -> find_mentions -> extract_records over one page.
[[nodiscard]] PageExtraction extract_page(const PageText& page, const PersonDictionary& dict,
                                          const SplitOptions& options = {});

}  // namespace cograph
