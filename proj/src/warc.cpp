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

#include "cograph/warc.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <unordered_map>

#include "cograph/gzip.hpp"
#include "cograph/text_util.hpp"

namespace cograph {

namespace {

constexpr std::size_t kReadChunk = 1 << 16;
constexpr std::size_t kMaxHeaderBytes = 1 << 20;

bool is_version_line(std::string_view line) {
    line = trim_ascii(line);
    return line == "WARC/1.0" || line == "WARC/1.1";
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '\r' || c == '\n' || c == ' ' || c == '\t'; });
}

RecordType record_type_of(std::string_view value) {
    const std::string lowered = ascii_lower(trim_ascii(value));
    if (lowered == "response") {
        return RecordType::response;
    }
    if (lowered == "resource") {
        return RecordType::resource;
    }
    return RecordType::other;
}

}  // namespace

std::string_view to_string(RecordType type) noexcept {
    switch (type) {
        case RecordType::response:
            return "response";
        case RecordType::resource:
            return "resource";
        case RecordType::other:
            break;
    }
    return "other";
}

struct WarcReader::Impl {
    explicit Impl(std::istream& in) : in(in) {}

    std::istream& in;
    std::optional<Inflater> inflater;
    bool sniffed = false;
    bool source_eof = false;
    std::optional<std::string> decode_error;  // bytes decoded before it stay usable

    std::string buf;        // decoded bytes not yet consumed
    std::size_t pos = 0;    // read cursor within buf
    std::uint64_t base = 0; // stream offset of buf[0]

    StreamOutcome outcome = StreamOutcome::in_progress;
    std::vector<WarcDiagnostic> diagnostics;
    std::optional<WarcDiagnostic> error;

    std::uint64_t offset_of(std::size_t p) const { return base + p; }

    // Pulls more decoded bytes into buf. Returns false at end of input.
    bool fill() {
        if (source_eof) {
            return false;
        }
        std::array<char, kReadChunk> raw{};
        in.read(raw.data(), raw.size());
        const auto got = static_cast<std::size_t>(in.gcount());
        if (got == 0) {
            source_eof = true;
            if (inflater && !inflater->at_member_boundary()) {
                decode_error = "gzip: stream ends mid-member";
            }
            return false;
        }
        std::string_view chunk(raw.data(), got);
        if (!sniffed) {
            sniffed = true;
            if (has_gzip_magic(chunk)) {
                inflater.emplace();
            }
        }
        if (inflater) {
            try {
                inflater->feed(chunk, buf);
            } catch (const GzipError& e) {
                source_eof = true;
                decode_error = std::string("gzip: ") + e.what();
            }
        } else {
            buf.append(chunk);
        }
        return true;
    }

    bool ensure(std::size_t n) {
        while (buf.size() - pos < n) {
            if (!fill()) {
                return false;
            }
        }
        return true;
    }

    bool ensure_at(std::size_t at, std::size_t n) {
        while (buf.size() < at + n) {
            if (!fill()) {
                return false;
            }
        }
        return true;
    }

    void compact() {
        if (pos > (1u << 20) && pos > buf.size() / 2) {
            buf.erase(0, pos);
            base += pos;
            pos = 0;
        }
    }

    // Reads one line (without the trailing LF) starting at `at`; returns the
    // position after the LF, or npos if no LF could be found within `limit`.
    std::size_t line_end(std::size_t at, std::size_t limit) {
        std::size_t scan = at;
        for (;;) {
            const auto nl = buf.find('\n', scan);
            if (nl != std::string::npos) {
                return nl + 1;
            }
            scan = buf.size();
            if (scan - at > limit || !fill()) {
                return std::string::npos;
            }
        }
    }

    // Locates the next "WARC/1.x" line starting at or after `from`. The match
    // must begin a line. Returns npos if the input is exhausted first.
    std::size_t find_boundary(std::size_t from) {
        std::size_t scan = from;
        for (;;) {
            auto hit = buf.find("WARC/1.", scan);
            while (hit != std::string::npos) {
                const bool at_line_start = hit == 0 || buf[hit - 1] == '\n';
                const auto end = line_end(hit, kMaxHeaderBytes);
                const auto stop = end == std::string::npos ? buf.size() : end;
                if (is_version_line(std::string_view(buf).substr(hit, stop - hit))) {
                    // a truncated record may leave a partial line glued to the next version line
                    if (at_line_start || (end != std::string::npos && ensure_at(end, 5) &&
                                          istarts_with(std::string_view(buf).substr(end), "WARC-"))) {
                        return hit;
                    }
                }
                hit = buf.find("WARC/1.", hit + 1);
            }
            scan = buf.size() >= 7 ? buf.size() - 7 : 0;
            scan = std::max(scan, from);
            if (!fill()) {
                return std::string::npos;
            }
        }
    }

    void finish() {
        if (decode_error) {
            fail(buf.size(), *decode_error);
        } else {
            outcome = StreamOutcome::end_of_stream;
        }
    }

    void skip(std::size_t at, std::string message) {
        diagnostics.push_back({offset_of(at), std::move(message)});
    }

    void fail(std::size_t at, std::string message) {
        error = WarcDiagnostic{offset_of(at), std::move(message)};
        outcome = StreamOutcome::stream_error;
    }

    // Moves the cursor to the next boundary at/after `from`. Returns false if
    // there is none; with garbage_is_error, leftover non-blank bytes are a stream error.
    bool resync(std::size_t from, bool garbage_is_error) {
        const auto hit = find_boundary(from);
        if (hit == std::string::npos) {
            if (garbage_is_error && !decode_error &&
                !is_blank(std::string_view(buf).substr(std::min(from, buf.size())))) {
                fail(from, "cannot find next WARC record boundary");
            } else {
                finish();
            }
            pos = buf.size();
            return false;
        }
        pos = hit;
        return true;
    }

    std::optional<WarcRecord> next_record() {
        while (outcome == StreamOutcome::in_progress) {
            compact();
            // skip inter-record whitespace
            for (;;) {
                while (pos < buf.size() && (buf[pos] == '\r' || buf[pos] == '\n' || buf[pos] == ' ' || buf[pos] == '\t')) {
                    ++pos;
                }
                if (pos < buf.size() || !fill()) {
                    break;
                }
            }
            if (pos >= buf.size()) {
                finish();
                return std::nullopt;
            }

            const std::size_t start = pos;
            const auto version_end = line_end(start, kMaxHeaderBytes);
            const auto version_stop = version_end == std::string::npos ? buf.size() : version_end;
            if (!is_version_line(std::string_view(buf).substr(start, version_stop - start))) {
                if (!resync(start + 1, true)) {
                    return std::nullopt;
                }
                skip(start, "expected WARC version line");
                continue;
            }
            if (version_end == std::string::npos) {
                skip(start, "record header truncated");
                finish();
                return std::nullopt;
            }

            // header fields
            std::unordered_map<std::string, std::string> fields;
            std::string last_name;
            std::size_t cursor = version_end;
            bool header_ok = true;
            bool header_done = false;
            std::string problem;
            while (!header_done) {
                const auto end = line_end(cursor, kMaxHeaderBytes);
                if (end == std::string::npos || end - version_end > kMaxHeaderBytes) {
                    header_ok = false;
                    problem = "record header truncated";
                    break;
                }
                std::string_view line = std::string_view(buf).substr(cursor, end - cursor);
                cursor = end;
                line = trim_line_ending(line);
                if (line.empty()) {
                    header_done = true;
                    break;
                }
                if ((line.front() == ' ' || line.front() == '\t') && !last_name.empty()) {
                    fields[last_name] += ' ';
                    fields[last_name] += trim_ascii(line);
                    continue;
                }
                const auto colon = line.find(':');
                if (colon == std::string_view::npos || colon == 0) {
                    header_ok = false;
                    problem = "malformed header field";
                    break;
                }
                last_name = ascii_lower(trim_ascii(line.substr(0, colon)));
                fields[last_name] = std::string(trim_ascii(line.substr(colon + 1)));
            }
            if (!header_ok) {
                skip(start, problem);
                if (!resync(version_end, false)) {
                    return std::nullopt;
                }
                continue;
            }

            std::size_t length = 0;
            {
                const auto it = fields.find("content-length");
                const std::string_view value = it == fields.end() ? std::string_view{} : std::string_view(it->second);
                const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), length);
                if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
                    skip(start, "missing or invalid Content-Length");
                    if (!resync(cursor, false)) {
                        return std::nullopt;
                    }
                    continue;
                }
            }

            const std::size_t block_start = cursor;
            const std::size_t block_offset = block_start - pos;
            if (!ensure(block_offset + length)) {
                skip(start, "record block shorter than Content-Length");
                if (!resync(block_start, false)) {
                    return std::nullopt;
                }
                continue;
            }
            const std::size_t block_end = block_start + length;

            // the block must be followed by CRLF CRLF (bare LF LF tolerated) or EOF
            ensure(block_offset + length + 4);
            std::string_view tail = std::string_view(buf).substr(block_end, 4);
            std::size_t terminator = 0;
            if (tail.substr(0, 4) == "\r\n\r\n") {
                terminator = 4;
            } else if (tail.substr(0, 2) == "\n\n") {
                terminator = 2;
            } else if (!is_blank(tail)) {
                skip(start, "record block length does not match Content-Length");
                if (!resync(block_start, false)) {
                    return std::nullopt;
                }
                continue;
            } else {
                terminator = tail.size();
            }

            WarcRecord record;
            record.payload.assign(buf, block_start, length);
            pos = block_end + terminator;

            auto field = [&](const char* name) -> std::string_view {
                const auto it = fields.find(name);
                return it == fields.end() ? std::string_view{} : std::string_view(it->second);
            };

            const auto date = parse_timestamp(field("warc-date"));
            if (!date) {
                skip(start, "missing or invalid WARC-Date");
                continue;
            }
            record.crawl_date = *date;
            record.record_type = record_type_of(field("warc-type"));
            std::string_view uri = field("warc-target-uri");
            if (uri.size() >= 2 && uri.front() == '<' && uri.back() == '>') {
                uri = uri.substr(1, uri.size() - 2);
            }
            record.target_url = std::string(uri);
            if (record.record_type != RecordType::other && record.target_url.empty()) {
                skip(start, "missing WARC-Target-URI");
                continue;
            }
            record.content_type = std::string(field("content-type"));
            return record;
        }
        return std::nullopt;
    }
};

WarcReader::WarcReader(std::istream& in) : impl_(std::make_unique<Impl>(in)) {}
WarcReader::~WarcReader() = default;

std::optional<WarcRecord> WarcReader::next() {
    if (impl_->outcome != StreamOutcome::in_progress) {
        return std::nullopt;
    }
    try {
        return impl_->next_record();
    } catch (const GzipError& e) {
        impl_->fail(impl_->buf.size(), std::string("gzip: ") + e.what());
    } catch (const std::ios_base::failure& e) {
        impl_->fail(impl_->buf.size(), std::string("read error: ") + e.what());
    }
    return std::nullopt;
}

StreamOutcome WarcReader::outcome() const noexcept { return impl_->outcome; }

const std::vector<WarcDiagnostic>& WarcReader::diagnostics() const noexcept { return impl_->diagnostics; }

const std::optional<WarcDiagnostic>& WarcReader::stream_error() const noexcept { return impl_->error; }

WarcParseResult parse_warc(std::istream& in) {
    WarcReader reader(in);
    WarcParseResult result;
    while (auto record = reader.next()) {
        result.records.push_back(std::move(*record));
    }
    result.skipped = reader.diagnostics();
    result.outcome = reader.outcome();
    result.stream_error = reader.stream_error();
    return result;
}

}  // namespace cograph
