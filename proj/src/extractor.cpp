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

#include "cograph/extractor.hpp"

#include <set>

namespace cograph {

std::vector<Mention> find_mentions(const Sentence& sentence, const PersonDictionary& dict) {
    std::vector<Mention> mentions;
    const std::span<const std::string> tokens(sentence.tokens);
    std::size_t pos = 0;
    while (pos < tokens.size()) {
        std::size_t name_index = 0;
        const std::size_t len = dict.match_at(tokens, pos, name_index);
        if (len == 0) {
            ++pos;
            continue;
        }
        mentions.push_back({dict.names()[name_index], pos, pos + len});
        pos += len;
    }
    return mentions;
}

std::vector<CoMentionRecord> extract_records(const Sentence& sentence, std::span<const Mention> mentions,
                                             const RecordContext& context) {
    std::vector<CoMentionRecord> records;
    if (mentions.size() < 2) {
        return records;
    }
    std::set<std::string_view> distinct;
    for (const auto& m : mentions) {
        distinct.insert(m.name);
    }
    const int n_persons = static_cast<int>(distinct.size());
    if (n_persons < 2) {
        return records;
    }
    for (std::size_t i = 0; i + 1 < mentions.size(); ++i) {
        const Mention& left = mentions[i];
        const Mention& right = mentions[i + 1];
        if (left.name == right.name || right.start < left.end) {
            continue;
        }
        const std::size_t gap = right.start - left.end;
        if (gap > kMaxPatternTokens) {
            continue;
        }
        CoMentionRecord record;
        if (left.name < right.name) {
            record.person_a = left.name;
            record.person_b = right.name;
        } else {
            record.person_a = right.name;
            record.person_b = left.name;
        }
        for (std::size_t k = left.end; k < right.start; ++k) {
            if (!record.pattern.empty()) {
                record.pattern += ' ';
            }
            record.pattern += sentence.tokens[k];
        }
        record.n_persons = n_persons;
        record.url = context.url;
        record.crawl_date = context.crawl_date;
        records.push_back(std::move(record));
    }
    return records;
}

PageExtraction extract_page(const PageText& page, const PersonDictionary& dict, const SplitOptions& options) {
    PageExtraction out;
    const SplitResult split = split_sentences(page.text, options);
    out.sentences = split.sentences.size();
    out.discarded_sentences = split.discarded;
    const RecordContext context{page.url, page.crawl_date};
    for (const auto& sentence : split.sentences) {
        const auto mentions = find_mentions(sentence, dict);
        auto records = extract_records(sentence, mentions, context);
        for (auto& r : records) {
            out.records.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace cograph
