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

#include "cograph/record.hpp"

#include <tuple>

namespace cograph {

bool content_less(const CoMentionRecord& lhs, const CoMentionRecord& rhs) noexcept {
    return std::tie(lhs.crawl_date, lhs.person_a, lhs.person_b, lhs.pattern, lhs.n_persons, lhs.url) <
           std::tie(rhs.crawl_date, rhs.person_a, rhs.person_b, rhs.pattern, rhs.n_persons, rhs.url);
}

}  // namespace cograph
