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

#include "cograph/timestamp.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace cograph {

namespace {

// Reads exactly `width` decimal digits at `pos`.
bool read_fixed(std::string_view s, std::size_t& pos, std::size_t width, int& out) {
    if (pos + width > s.size()) {
        return false;
    }
    int value = 0;
    for (std::size_t i = 0; i < width; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') {
            return false;
        }
        value = value * 10 + (c - '0');
    }
    pos += width;
    out = value;
    return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

std::optional<std::chrono::sys_days> civil_day(int y, int m, int d) {
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        return std::nullopt;
    }
    return std::chrono::sys_days{ymd};
}

}  // namespace

std::optional<Timestamp> parse_date(std::string_view text) {
    std::size_t pos = 0;
    int y = 0, m = 0, d = 0;
    if (!read_fixed(text, pos, 4, y) || !expect(text, pos, '-') || !read_fixed(text, pos, 2, m) ||
        !expect(text, pos, '-') || !read_fixed(text, pos, 2, d) || pos != text.size()) {
        return std::nullopt;
    }
    auto day = civil_day(y, m, d);
    if (!day) {
        return std::nullopt;
    }
    return Timestamp{*day};
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    if (text.size() == 10) {
        return parse_date(text);
    }

    std::size_t pos = 0;
    int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
    if (!read_fixed(text, pos, 4, y) || !expect(text, pos, '-') || !read_fixed(text, pos, 2, mo) ||
        !expect(text, pos, '-') || !read_fixed(text, pos, 2, d) || !expect(text, pos, 'T') ||
        !read_fixed(text, pos, 2, hh) || !expect(text, pos, ':') || !read_fixed(text, pos, 2, mm)) {
        return std::nullopt;
    }
    if (expect(text, pos, ':')) {
        if (!read_fixed(text, pos, 2, ss)) {
            return std::nullopt;
        }
        if (expect(text, pos, '.')) {
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                ++pos;
            }
            if (pos == start) {
                return std::nullopt;
            }
        }
    }
    // leap second "60" is tolerated and folded into the next minute
    if (hh > 23 || mm > 59 || ss > 60) {
        return std::nullopt;
    }

    int offset_minutes = 0;
    if (expect(text, pos, 'Z')) {
        // UTC
    } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        const int sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        int oh = 0, om = 0;
        if (!read_fixed(text, pos, 2, oh)) {
            return std::nullopt;
        }
        expect(text, pos, ':');
        if (!read_fixed(text, pos, 2, om) || oh > 23 || om > 59) {
            return std::nullopt;
        }
        offset_minutes = sign * (oh * 60 + om);
    } else {
        return std::nullopt;
    }
    if (pos != text.size()) {
        return std::nullopt;
    }

    auto day = civil_day(y, mo, d);
    if (!day) {
        return std::nullopt;
    }
    using namespace std::chrono;
    return Timestamp{*day} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

std::string format_timestamp(Timestamp t) {
    using namespace std::chrono;
    const auto day = floor<days>(t);
    const year_month_day ymd{day};
    const hh_mm_ss<seconds> tod{t - day};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()));
    return buf;
}

int utc_year(Timestamp t) {
    const std::chrono::year_month_day ymd{std::chrono::floor<std::chrono::days>(t)};
    return static_cast<int>(ymd.year());
}

Timestamp make_timestamp(std::string_view text) {
    auto t = parse_timestamp(text);
    if (!t) {
        throw std::invalid_argument("invalid timestamp: " + std::string(text));
    }
    return *t;
}

}  // namespace cograph
