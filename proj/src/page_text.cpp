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

#include "cograph/page_text.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <unordered_map>

#include "cograph/gzip.hpp"
#include "cograph/text_util.hpp"

namespace cograph {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_alnum(char c) { return is_alpha(c) || (c >= '0' && c <= '9'); }

// Elements whose content is never rendered as text.
bool is_raw_skip(std::string_view name) {
    return name == "script" || name == "style" || name == "noscript" || name == "template" || name == "svg" ||
           name == "iframe" || name == "object";
}

bool is_block(std::string_view name) {
    static constexpr std::array<std::string_view, 44> kBlocks = {
        "address", "article", "aside",  "blockquote", "body",     "br",     "caption", "center", "dd",
        "details", "dialog",  "div",    "dl",         "dt",       "fieldset", "figcaption", "figure", "footer",
        "form",    "h1",      "h2",     "h3",         "h4",       "h5",     "h6",      "head",   "header",
        "hr",      "html",    "li",     "main",       "nav",      "ol",     "option",  "p",      "pre",
        "section", "summary", "table",  "td",         "th",       "title",  "tr",      "ul"};
    return std::find(kBlocks.begin(), kBlocks.end(), name) != kBlocks.end();
}

const std::unordered_map<std::string_view, char32_t>& named_entities() {
    static const std::unordered_map<std::string_view, char32_t> table = {
        {"amp", U'&'},      {"lt", U'<'},       {"gt", U'>'},       {"quot", U'"'},     {"apos", U'\''},
        {"nbsp", U' '},     {"ensp", U' '},     {"emsp", U' '},     {"thinsp", U' '},
        {"ndash", 0x2013},  {"mdash", 0x2014},  {"hellip", 0x2026}, {"lsquo", 0x2018},  {"rsquo", 0x2019},
        {"sbquo", 0x201A},  {"ldquo", 0x201C},  {"rdquo", 0x201D},  {"bdquo", 0x201E},  {"laquo", 0xAB},
        {"raquo", 0xBB},    {"lsaquo", 0x2039}, {"rsaquo", 0x203A}, {"bull", 0x2022},   {"middot", 0xB7},
        {"copy", 0xA9},     {"reg", 0xAE},      {"trade", 0x2122},  {"deg", 0xB0},      {"plusmn", 0xB1},
        {"times", 0xD7},    {"divide", 0xF7},   {"euro", 0x20AC},   {"pound", 0xA3},    {"yen", 0xA5},
        {"cent", 0xA2},     {"sect", 0xA7},     {"para", 0xB6},     {"iexcl", 0xA1},    {"iquest", 0xBF},
        {"Agrave", 0xC0},   {"Aacute", 0xC1},   {"Acirc", 0xC2},    {"Atilde", 0xC3},   {"Auml", 0xC4},
        {"Aring", 0xC5},    {"AElig", 0xC6},    {"Ccedil", 0xC7},   {"Egrave", 0xC8},   {"Eacute", 0xC9},
        {"Ecirc", 0xCA},    {"Euml", 0xCB},     {"Igrave", 0xCC},   {"Iacute", 0xCD},   {"Icirc", 0xCE},
        {"Iuml", 0xCF},     {"ETH", 0xD0},      {"Ntilde", 0xD1},   {"Ograve", 0xD2},   {"Oacute", 0xD3},
        {"Ocirc", 0xD4},    {"Otilde", 0xD5},   {"Ouml", 0xD6},     {"Oslash", 0xD8},   {"Ugrave", 0xD9},
        {"Uacute", 0xDA},   {"Ucirc", 0xDB},    {"Uuml", 0xDC},     {"Yacute", 0xDD},   {"THORN", 0xDE},
        {"szlig", 0xDF},    {"agrave", 0xE0},   {"aacute", 0xE1},   {"acirc", 0xE2},    {"atilde", 0xE3},
        {"auml", 0xE4},     {"aring", 0xE5},    {"aelig", 0xE6},    {"ccedil", 0xE7},   {"egrave", 0xE8},
        {"eacute", 0xE9},   {"ecirc", 0xEA},    {"euml", 0xEB},     {"igrave", 0xEC},   {"iacute", 0xED},
        {"icirc", 0xEE},    {"iuml", 0xEF},     {"eth", 0xF0},      {"ntilde", 0xF1},   {"ograve", 0xF2},
        {"oacute", 0xF3},   {"ocirc", 0xF4},    {"otilde", 0xF5},   {"ouml", 0xF6},     {"oslash", 0xF8},
        {"ugrave", 0xF9},   {"uacute", 0xFA},   {"ucirc", 0xFB},    {"uuml", 0xFC},     {"yacute", 0xFD},
        {"thorn", 0xFE},    {"yuml", 0xFF},     {"Scaron", 0x160},  {"scaron", 0x161},  {"Zcaron", 0x17D},
        {"zcaron", 0x17E},  {"OElig", 0x152},   {"oelig", 0x153},   {"Yuml", 0x178},    {"circ", 0x2C6},
        {"tilde", 0x2DC},   {"dagger", 0x2020}, {"Dagger", 0x2021}, {"permil", 0x2030}, {"prime", 0x2032},
        {"Prime", 0x2033},  {"larr", 0x2190},   {"rarr", 0x2192},   {"uarr", 0x2191},   {"darr", 0x2193},
        {"frac12", 0xBD},   {"frac14", 0xBC},   {"frac34", 0xBE},   {"sup2", 0xB2},     {"sup3", 0xB3},
        {"micro", 0xB5},    {"ordf", 0xAA},     {"ordm", 0xBA},     {"not", 0xAC},      {"macr", 0xAF},
        {"acute", 0xB4},    {"cedil", 0xB8},    {"uml", 0xA8},      {"brvbar", 0xA6},   {"curren", 0xA4},
    };
    return table;
}

// Characters that render as whitespace in the text model.
bool is_space_codepoint(char32_t cp) { return cp == U' ' || cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200A); }

std::string collapse_lines(std::string_view input) {
    // U+00A0 separates words like an ordinary space
    std::string raw(input);
    for (auto at = raw.find("\xC2\xA0"); at != std::string::npos; at = raw.find("\xC2\xA0", at)) {
        raw.replace(at, 2, " ");
    }
    std::string out;
    std::size_t start = 0;
    while (start <= raw.size()) {
        auto nl = raw.find('\n', start);
        if (nl == std::string_view::npos) {
            nl = raw.size();
        }
        const std::string line = normalize_spaces(std::string_view(raw).substr(start, nl - start));
        if (!line.empty()) {
            if (!out.empty()) {
                out += '\n';
            }
            out += line;
        }
        start = nl + 1;
    }
    return out;
}

// Finds the '>' that closes a tag opened at `pos`, skipping quoted attribute values.
std::size_t find_tag_end(std::string_view html, std::size_t pos) {
    char quote = 0;
    for (std::size_t i = pos; i < html.size(); ++i) {
        const char c = html[i];
        if (quote != 0) {
            if (c == quote) {
                quote = 0;
            }
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            return i;
        }
    }
    return std::string_view::npos;
}

std::size_t find_icase(std::string_view hay, std::string_view needle, std::size_t from) {
    for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
        if (istarts_with(hay.substr(i), needle)) {
            return i;
        }
    }
    return std::string_view::npos;
}

struct HttpMessage {
    std::string content_type;
    std::string transfer_encoding;
    std::string content_encoding;
    std::string_view body;
};

std::optional<HttpMessage> parse_http_response(std::string_view block) {
    HttpMessage msg;
    std::size_t pos = 0;
    bool first = true;
    for (;;) {
        const auto nl = block.find('\n', pos);
        if (nl == std::string_view::npos) {
            return std::nullopt;
        }
        const std::string_view line = trim_line_ending(block.substr(pos, nl - pos));
        pos = nl + 1;
        if (first) {
            if (!istarts_with(line, "HTTP/")) {
                return std::nullopt;
            }
            first = false;
            continue;
        }
        if (line.empty()) {
            break;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            continue;
        }
        const std::string name = ascii_lower(trim_ascii(line.substr(0, colon)));
        const std::string_view value = trim_ascii(line.substr(colon + 1));
        if (name == "content-type") {
            msg.content_type = std::string(value);
        } else if (name == "transfer-encoding") {
            msg.transfer_encoding = ascii_lower(value);
        } else if (name == "content-encoding") {
            msg.content_encoding = ascii_lower(value);
        }
    }
    msg.body = block.substr(pos);
    return msg;
}

std::optional<std::string> dechunk(std::string_view body) {
    std::string out;
    std::size_t pos = 0;
    for (;;) {
        const auto nl = body.find('\n', pos);
        if (nl == std::string_view::npos) {
            return std::nullopt;
        }
        std::string_view size_line = trim_ascii(body.substr(pos, nl - pos));
        if (const auto semi = size_line.find(';'); semi != std::string_view::npos) {
            size_line = trim_ascii(size_line.substr(0, semi));
        }
        std::size_t size = 0;
        const auto [ptr, ec] = std::from_chars(size_line.data(), size_line.data() + size_line.size(), size, 16);
        if (ec != std::errc{} || ptr != size_line.data() + size_line.size()) {
            return std::nullopt;
        }
        pos = nl + 1;
        if (size == 0) {
            return out;
        }
        if (pos + size > body.size()) {
            return std::nullopt;
        }
        out.append(body.substr(pos, size));
        pos += size;
        if (body.substr(pos, 2) == "\r\n") {
            pos += 2;
        } else if (body.substr(pos, 1) == "\n") {
            pos += 1;
        }
    }
}

}  // namespace

MediaType parse_media_type(std::string_view content_type) {
    MediaType media;
    const auto semi = content_type.find(';');
    media.mime = ascii_lower(trim_ascii(content_type.substr(0, semi)));
    if (semi == std::string_view::npos) {
        return media;
    }
    std::string_view params = content_type.substr(semi + 1);
    while (!params.empty()) {
        const auto next = params.find(';');
        const std::string_view param = trim_ascii(params.substr(0, next));
        const auto eq = param.find('=');
        if (eq != std::string_view::npos && ascii_lower(trim_ascii(param.substr(0, eq))) == "charset") {
            std::string_view value = trim_ascii(param.substr(eq + 1));
            if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
                value = value.substr(1, value.size() - 2);
            }
            media.charset = ascii_lower(value);
        }
        if (next == std::string_view::npos) {
            break;
        }
        params.remove_prefix(next + 1);
    }
    return media;
}

std::size_t decode_entity(std::string_view html, std::size_t pos, std::string& out) {
    // html[pos] == '&'
    std::size_t i = pos + 1;
    if (i < html.size() && html[i] == '#') {
        ++i;
        int base = 10;
        if (i < html.size() && (html[i] == 'x' || html[i] == 'X')) {
            base = 16;
            ++i;
        }
        const std::size_t digits_start = i;
        char32_t cp = 0;
        bool overflow = false;
        while (i < html.size()) {
            const char c = html[i];
            int d = -1;
            if (c >= '0' && c <= '9') {
                d = c - '0';
            } else if (base == 16 && c >= 'a' && c <= 'f') {
                d = c - 'a' + 10;
            } else if (base == 16 && c >= 'A' && c <= 'F') {
                d = c - 'A' + 10;
            }
            if (d < 0) {
                break;
            }
            if (cp > 0x10FFFF) {
                overflow = true;
            } else {
                cp = cp * static_cast<char32_t>(base) + static_cast<char32_t>(d);
            }
            ++i;
        }
        if (i == digits_start) {
            out += '&';
            return 1;
        }
        if (i < html.size() && html[i] == ';') {
            ++i;
        }
        if (overflow || cp == 0) {
            cp = 0xFFFD;
        }
        if (is_space_codepoint(cp)) {
            out += ' ';
        } else if (cp >= 0x80 && cp <= 0x9F) {
            // legacy pages put windows-1252 code points in numeric references
            std::string tmp(1, static_cast<char>(cp));
            out += decode_charset(tmp, "windows-1252");
        } else {
            append_utf8(out, cp);
        }
        return i - pos;
    }

    std::size_t j = i;
    while (j < html.size() && j - i < 10 && is_alnum(html[j])) {
        ++j;
    }
    const std::string_view name = html.substr(i, j - i);
    const auto& table = named_entities();
    const auto hit = table.find(name);
    const bool terminated = j < html.size() && html[j] == ';';
    const bool legacy = name == "amp" || name == "lt" || name == "gt" || name == "quot" || name == "nbsp";
    if (hit == table.end() || (!terminated && !legacy)) {
        out += '&';
        return 1;
    }
    if (is_space_codepoint(hit->second)) {
        out += ' ';
    } else {
        append_utf8(out, hit->second);
    }
    return (j - pos) + (terminated ? 1 : 0);
}

std::string html_to_text(std::string_view html) {
    std::string raw;
    raw.reserve(html.size() / 2);
    std::size_t i = 0;
    while (i < html.size()) {
        const char c = html[i];
        if (c == '<') {
            if (html.substr(i, 4) == "<!--") {
                const auto end = html.find("-->", i + 4);
                i = end == std::string_view::npos ? html.size() : end + 3;
                continue;
            }
            const char next = i + 1 < html.size() ? html[i + 1] : '\0';
            if (next == '!' || next == '?') {
                const auto end = html.find('>', i);
                i = end == std::string_view::npos ? html.size() : end + 1;
                continue;
            }
            const bool closing = next == '/';
            const std::size_t name_start = i + (closing ? 2 : 1);
            if (name_start >= html.size() || !is_alpha(html[name_start])) {
                raw += '<';
                ++i;
                continue;
            }
            std::size_t name_end = name_start;
            while (name_end < html.size() && (is_alnum(html[name_end]) || html[name_end] == '-' || html[name_end] == ':')) {
                ++name_end;
            }
            const std::string name = ascii_lower(html.substr(name_start, name_end - name_start));
            const auto tag_end = find_tag_end(html, name_end);
            if (tag_end == std::string_view::npos) {
                break;  // unterminated tag swallows the rest
            }
            const bool self_closing = tag_end > 0 && html[tag_end - 1] == '/';
            i = tag_end + 1;
            if (!closing && !self_closing && is_raw_skip(name)) {
                const auto close = find_icase(html, "</" + name, i);
                if (close == std::string_view::npos) {
                    i = html.size();
                } else {
                    const auto close_end = html.find('>', close);
                    i = close_end == std::string_view::npos ? html.size() : close_end + 1;
                }
                raw += ' ';
                continue;
            }
            if (is_block(name)) {
                raw += '\n';
            }
            continue;
        }
        if (c == '&') {
            i += decode_entity(html, i, raw);
            continue;
        }
        raw += is_ascii_space(c) ? ' ' : c;
        ++i;
    }
    return collapse_lines(raw);
}

std::string plain_to_text(std::string_view text) {
    std::string raw(text);
    std::replace(raw.begin(), raw.end(), '\r', '\n');
    return collapse_lines(raw);
}

std::optional<PageText> extract_text(const WarcRecord& record) {
    if (record.record_type != RecordType::response) {
        return std::nullopt;
    }
    MediaType media = parse_media_type(record.content_type);
    std::string_view body = record.payload;
    std::string decoded;
    if (media.mime == "application/http") {
        const auto msg = parse_http_response(record.payload);
        if (!msg) {
            return std::nullopt;
        }
        media = parse_media_type(msg->content_type);
        body = msg->body;
        if (media.mime != "text/html" && media.mime != "text/plain") {
            return std::nullopt;
        }
        if (msg->transfer_encoding.find("chunked") != std::string::npos) {
            auto joined = dechunk(body);
            if (!joined) {
                return std::nullopt;
            }
            decoded = std::move(*joined);
            body = decoded;
        }
        if (msg->content_encoding == "gzip" || msg->content_encoding == "x-gzip" ||
            msg->content_encoding == "deflate") {
            try {
                std::string inflated =
                    msg->content_encoding == "deflate" ? inflate_deflate(body) : gunzip(body);
                decoded = std::move(inflated);
                body = decoded;
            } catch (const GzipError&) {
                return std::nullopt;
            }
        }
    }
    if (media.mime != "text/html" && media.mime != "text/plain") {
        return std::nullopt;
    }
    const std::string utf8 = decode_charset(body, media.charset);
    PageText page;
    page.url = record.target_url;
    page.crawl_date = record.crawl_date;
    page.text = media.mime == "text/html" ? html_to_text(utf8) : plain_to_text(utf8);
    return page;
}

}  // namespace cograph
