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

#include "cograph/sentences.hpp"

#include <algorithm>
#include <array>

#include "cograph/text_util.hpp"

namespace cograph {

namespace {

constexpr std::array<std::string_view, 58> kAbbreviations = {
    "mr.",    "mrs.",  "ms.",   "dr.",   "prof.", "sr.",   "jr.",  "st.",   "mt.",   "ft.",   "gen.",   "sen.",
    "rep.",   "gov.",  "pres.", "lt.",   "col.",  "capt.", "cmdr.", "sgt.", "maj.",  "adm.",  "rev.",   "hon.",
    "messrs.", "mmes.", "vs.",  "v.",    "e.g.",  "i.e.",  "cf.",  "inc.",  "ltd.",  "co.",   "corp.",  "bros.",
    "no.",    "nos.",  "vol.",  "pp.",   "jan.",  "feb.",  "mar.", "apr.",  "jun.",  "jul.",  "aug.",   "sep.",
    "sept.",  "oct.",  "nov.",  "dec.",  "u.s.",  "u.k.",  "u.n.", "d.c.",  "approx.", "dept."};

// Strips trailing closing quotes/brackets, e.g. `said."` -> `said.`
std::string_view strip_closers(std::string_view token) {
    for (;;) {
        bool changed = false;
        for (std::string_view closer : {"\"", "'", ")", "]", "}", "”", "’", "»"}) {
            if (token.size() > closer.size() && token.ends_with(closer)) {
                token.remove_suffix(closer.size());
                changed = true;
                break;
            }
        }
        if (!changed) {
            return token;
        }
    }
}

std::string_view strip_openers(std::string_view token) {
    for (;;) {
        bool changed = false;
        for (std::string_view opener : {"\"", "'", "(", "[", "{", "“", "‘", "«"}) {
            if (token.size() > opener.size() && token.starts_with(opener)) {
                token.remove_prefix(opener.size());
                changed = true;
                break;
            }
        }
        if (!changed) {
            return token;
        }
    }
}

bool ends_sentence(std::string_view token) {
    const std::string_view core = strip_closers(token);
    if (core.empty()) {
        return false;
    }
    const char last = core.back();
    if (last == '!' || last == '?') {
        return true;
    }
    return last == '.' && !is_abbreviation(core);
}

bool starts_sentence(std::string_view token) {
    const std::string_view core = strip_openers(token);
    if (core.empty()) {
        return false;
    }
    const auto c = static_cast<unsigned char>(core.front());
    if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) {
        return true;
    }
    // Latin-1 supplement capitals (U+00C0..U+00DE except U+00D7) encode as C3 80..C3 9E
    if (c == 0xC3 && core.size() >= 2) {
        const auto c2 = static_cast<unsigned char>(core[1]);
        return c2 >= 0x80 && c2 <= 0x9E && c2 != 0x97;
    }
    return false;
}

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

bool is_abbreviation(std::string_view token) {
    token = strip_openers(token);
    if (token.size() < 2 || token.back() != '.') {
        return false;
    }
    // single initial: "W."
    if (token.size() == 2 && token[0] >= 'A' && token[0] <= 'Z') {
        return true;
    }
    // dotted acronym: letter ('.' letter)* '.'
    bool dotted = token.size() >= 4;
    for (std::size_t i = 0; dotted && i < token.size(); ++i) {
        dotted = (i % 2 == 0) ? is_letter(token[i]) : token[i] == '.';
    }
    if (dotted) {
        return true;
    }
    const std::string lowered = ascii_lower(token);
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) != kAbbreviations.end();
}

SplitResult split_sentences(std::string_view text, const SplitOptions& options) {
    SplitResult result;
    auto flush = [&](std::vector<std::string>& tokens) {
        if (tokens.empty()) {
            return;
        }
        if (tokens.size() > options.max_sentence_tokens) {
            ++result.discarded;
            tokens.clear();
            return;
        }
        Sentence sentence;
        for (const auto& t : tokens) {
            if (!sentence.text.empty()) {
                sentence.text += ' ';
            }
            sentence.text += t;
        }
        sentence.tokens = std::move(tokens);
        tokens = {};
        result.sentences.push_back(std::move(sentence));
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const auto words = split_whitespace(text.substr(start, nl - start));
        std::vector<std::string> current;
        for (std::size_t i = 0; i < words.size(); ++i) {
            current.emplace_back(words[i]);
            if (i + 1 < words.size() && ends_sentence(words[i]) && starts_sentence(words[i + 1])) {
                flush(current);
            }
        }
        flush(current);
        start = nl + 1;
    }
    return result;
}

}  // namespace cograph
