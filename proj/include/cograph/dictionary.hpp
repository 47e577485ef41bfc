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
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cograph {

class DictionaryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Punctuation that may cling to a word without being part of it: ASCII
/// punctuation plus typographic quotes, guillemets, dashes and ellipsis.
[[nodiscard]] std::string_view trim_punct_left(std::string_view token) noexcept;
[[nodiscard]] std::string_view trim_punct_right(std::string_view token) noexcept;
[[nodiscard]] inline std::string_view trim_punct(std::string_view token) noexcept {
    return trim_punct_right(trim_punct_left(token));
}

struct DictionaryLoadStats {
    std::size_t accepted = 0;
    std::size_t duplicates = 0;
    std::size_t blank = 0;
    std::size_t comments = 0;
    std::size_t rejected = 0;  ///< more than kMaxNameTokens tokens, or punctuation only
};

/// Set of person names (1-5 whitespace-separated tokens each) with an index
/// keyed by the first token, so every sentence position is checked against
/// the few names that can start there, longest first.
///
/// Matching is case-sensitive on surface forms. Leading punctuation of a
/// span's first token and trailing punctuation of its last token are ignored
/// on both sides, so "McCain," and "(Barack" still match.
class PersonDictionary {
public:
    static constexpr std::size_t kMaxNameTokens = 5;

    struct Candidate {
        std::size_t name_index;
        std::vector<std::string> tokens;  ///< match keys, see match_at()
    };

    /// Throws DictionaryError when no usable name remains.
    explicit PersonDictionary(std::span<const std::string> names);

    /// One name per line, UTF-8; '#' lines are comments.
    [[nodiscard]] static PersonDictionary load(std::istream& in, DictionaryLoadStats* stats = nullptr);
    [[nodiscard]] static PersonDictionary from_text(std::string_view text, DictionaryLoadStats* stats = nullptr);
    [[nodiscard]] static PersonDictionary load_file(const std::string& path, DictionaryLoadStats* stats = nullptr);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    /// Normalized names in lexicographic order.
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] bool contains(std::string_view name) const;

    /// Longest dictionary name whose tokens match `tokens` starting at `pos`.
    /// Returns the token length and sets `name_index`, or 0 if none matches.
    [[nodiscard]] std::size_t match_at(std::span<const std::string> tokens, std::size_t pos,
                                       std::size_t& name_index) const;

private:
    PersonDictionary() = default;
    void build(std::vector<std::string> normalized);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::vector<Candidate>> by_first_token_;
};

}  // namespace cograph
