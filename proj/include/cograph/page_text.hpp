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

#include <optional>
#include <string>
#include <string_view>

#include "cograph/timestamp.hpp"
#include "cograph/warc.hpp"

namespace cograph {

/// Tag-free, entity-decoded page text. Lines separate block-level regions and
/// act as sentence-boundary hints; within a line there is never more than one
/// consecutive space.
struct PageText {
    std::string url;
    Timestamp crawl_date{};
    std::string text;
};

struct MediaType {
    std::string mime;     ///< lower-cased `type/subtype`
    std::string charset;  ///< lower-cased, empty if absent
};

[[nodiscard]] MediaType parse_media_type(std::string_view content_type);

/// HTML to plain text: drops tags, comments, script/style content; decodes
/// character references; block elements become line breaks.
[[nodiscard]] std::string html_to_text(std::string_view html);

/// Whitespace normalization for text/plain bodies.
[[nodiscard]] std::string plain_to_text(std::string_view text);

/// Appends the decoded character reference starting at html[pos] (which is
/// '&') to `out`, returning the number of input bytes consumed. Unknown
/// references are copied as a literal '&'.
std::size_t decode_entity(std::string_view html, std::size_t pos, std::string& out);

/// Text for response records whose MIME type is text/html or text/plain.
/// `application/http` blocks are unwrapped (chunked transfer and gzip/deflate
/// content coding handled) before the MIME check. Pure function of the record.
[[nodiscard]] std::optional<PageText> extract_text(const WarcRecord& record);

}  // namespace cograph
