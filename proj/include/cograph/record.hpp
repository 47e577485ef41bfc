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

#include "cograph/timestamp.hpp"

namespace cograph {

using RecordId = std::uint64_t;

/// One `<person1><pattern><person2>` occurrence. Only the person count is
/// stored; the entry weight is always derived as 1/n_persons.
struct CoMentionRecord {
    std::string person_a;  ///< lexicographically <= person_b
    std::string person_b;
    std::string pattern;   ///< 0-3 tokens found between the two mentions
    int n_persons = 2;     ///< distinct dictionary persons in the sentence
    std::string url;
    Timestamp crawl_date{};
    RecordId record_id = 0;  ///< assigned by the store; 0 until appended

    [[nodiscard]] double weight() const noexcept { return 1.0 / static_cast<double>(n_persons); }
    [[nodiscard]] bool involves(std::string_view person) const noexcept {
        return person_a == person || person_b == person;
    }

    /// Field-wise equality that ignores record_id.
    [[nodiscard]] bool same_content(const CoMentionRecord& other) const noexcept {
        return person_a == other.person_a && person_b == other.person_b && pattern == other.pattern &&
               n_persons == other.n_persons && url == other.url && crawl_date == other.crawl_date;
    }

    friend bool operator==(const CoMentionRecord&, const CoMentionRecord&) = default;
};

/// Total order on record content (ignores record_id); used to compare
/// stores as multisets.
[[nodiscard]] bool content_less(const CoMentionRecord& lhs, const CoMentionRecord& rhs) noexcept;

}  // namespace cograph
