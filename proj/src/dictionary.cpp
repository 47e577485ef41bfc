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

#include "cograph/dictionary.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "cograph/text_util.hpp"

namespace cograph {

namespace {

constexpr std::array<std::string_view, 13> kUnicodePunct = {
    "“", "”", "‘", "’", "«", "»", "„",
    "…", "–", "—", "‹", "›", "¿"};

bool ascii_punct(char c) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> out;
    for (auto piece : split_whitespace(s)) {
        out.emplace_back(piece);
    }
    return out;
}

// Match key of the token at `index` inside a span of `count` tokens.
std::string_view span_key(std::string_view token, std::size_t index, std::size_t count) {
    if (index == 0) {
        token = trim_punct_left(token);
    }
    if (index + 1 == count) {
        token = trim_punct_right(token);
    }
    return token;
}

}  // namespace

std::string_view trim_punct_left(std::string_view token) noexcept {
    for (;;) {
        if (token.empty()) {
            return token;
        }
        if (ascii_punct(token.front())) {
            token.remove_prefix(1);
            continue;
        }
        bool stripped = false;
        for (auto p : kUnicodePunct) {
            if (token.starts_with(p)) {
                token.remove_prefix(p.size());
                stripped = true;
                break;
            }
        }
        if (!stripped) {
            return token;
        }
    }
}

std::string_view trim_punct_right(std::string_view token) noexcept {
    for (;;) {
        if (token.empty()) {
            return token;
        }
        if (ascii_punct(token.back())) {
            token.remove_suffix(1);
            continue;
        }
        bool stripped = false;
        for (auto p : kUnicodePunct) {
            if (token.ends_with(p)) {
                token.remove_suffix(p.size());
                stripped = true;
                break;
            }
        }
        if (!stripped) {
            return token;
        }
    }
}

PersonDictionary::PersonDictionary(std::span<const std::string> names) {
    std::vector<std::string> normalized;
    normalized.reserve(names.size());
    for (const auto& name : names) {
        normalized.push_back(normalize_spaces(name));
    }
    build(std::move(normalized));
}

void PersonDictionary::build(std::vector<std::string> normalized) {
    std::set<std::string> unique;
    for (auto& name : normalized) {
        const auto tokens = tokenize(name);
        if (tokens.empty() || tokens.size() > kMaxNameTokens || trim_punct(name).empty()) {
            continue;
        }
        unique.insert(std::move(name));
    }
    if (unique.empty()) {
        throw DictionaryError("empty dictionary: no usable person names");
    }
    names_.assign(unique.begin(), unique.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto tokens = tokenize(names_[i]);
        Candidate candidate{i, {}};
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            candidate.tokens.emplace_back(span_key(tokens[k], k, tokens.size()));
        }
        by_first_token_[std::string(trim_punct(tokens.front()))].push_back(std::move(candidate));
    }
    for (auto& [key, list] : by_first_token_) {
        std::stable_sort(list.begin(), list.end(),
                         [](const Candidate& a, const Candidate& b) { return a.tokens.size() > b.tokens.size(); });
    }
}

PersonDictionary PersonDictionary::from_text(std::string_view text, DictionaryLoadStats* stats) {
    DictionaryLoadStats local;
    std::vector<std::string> normalized;
    std::set<std::string> seen;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const std::string_view raw_line = text.substr(start, nl - start);
        start = nl + 1;
        const std::string_view line = trim_ascii(raw_line);
        if (line.empty()) {
            ++local.blank;
            continue;
        }
        if (line.front() == '#') {
            ++local.comments;
            continue;
        }
        std::string name = normalize_spaces(sanitize_utf8(line));
        const auto token_count = split_whitespace(name).size();
        if (token_count > kMaxNameTokens || trim_punct(name).empty()) {
            ++local.rejected;
            continue;
        }
        if (!seen.insert(name).second) {
            ++local.duplicates;
            continue;
        }
        normalized.push_back(std::move(name));
    }
    local.accepted = normalized.size();
    if (stats != nullptr) {
        *stats = local;
    }
    PersonDictionary dict;
    dict.build(std::move(normalized));
    return dict;
}

PersonDictionary PersonDictionary::load(std::istream& in, DictionaryLoadStats* stats) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str(), stats);
}

PersonDictionary PersonDictionary::load_file(const std::string& path, DictionaryLoadStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DictionaryError("cannot open dictionary file: " + path);
    }
    return load(in, stats);
}

bool PersonDictionary::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

std::size_t PersonDictionary::match_at(std::span<const std::string> tokens, std::size_t pos,
                                       std::size_t& name_index) const {
    if (pos >= tokens.size()) {
        return 0;
    }
    const auto it = by_first_token_.find(std::string(trim_punct(tokens[pos])));
    if (it == by_first_token_.end()) {
        return 0;
    }
    for (const auto& candidate : it->second) {
        const std::size_t len = candidate.tokens.size();
        if (pos + len > tokens.size()) {
            continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < len && ok; ++k) {
            ok = span_key(tokens[pos + k], k, len) == candidate.tokens[k];
        }
        if (ok) {
            name_index = candidate.name_index;
            return len;
        }
    }
    return 0;
}

}  // namespace cograph
