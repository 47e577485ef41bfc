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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace cograph {

/// UTC instant with one-second resolution. All crawl dates and query bounds
/// use this type; intervals are half-open [from, to).
using Timestamp = std::chrono::sys_seconds;
using Days = std::chrono::days;

struct Period {
    Timestamp from;
    Timestamp to;

    [[nodiscard]] bool contains(Timestamp t) const noexcept { return from <= t && t < to; }
    [[nodiscard]] bool valid() const noexcept { return from < to; }
    friend bool operator==(const Period&, const Period&) = default;
};

/// Parses W3C/ISO-8601 timestamps as used in WARC-Date headers:
/// `YYYY-MM-DD`, `YYYY-MM-DDThh:mm[:ss[.fff]]` followed by `Z` or `+hh:mm`.
/// Returns nullopt for anything it cannot fully consume or for impossible
/// calendar values.
[[nodiscard]] std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Strict `YYYY-MM-DD`, interpreted as UTC midnight.
[[nodiscard]] std::optional<Timestamp> parse_date(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SSZ`
[[nodiscard]] std::string format_timestamp(Timestamp t);

/// Calendar year of `t` in UTC.
[[nodiscard]] int utc_year(Timestamp t);

/// Convenience for tests and fixtures; throws std::invalid_argument on bad input.
[[nodiscard]] Timestamp make_timestamp(std::string_view text);

}  // namespace cograph
