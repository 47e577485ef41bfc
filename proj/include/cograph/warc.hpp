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
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cograph/timestamp.hpp"

namespace cograph {

enum class RecordType { response, resource, other };

/// One WARC record. `payload` is the complete record block, so its size always
/// equals the declared Content-Length.
struct WarcRecord {
    RecordType record_type = RecordType::other;
    std::string target_url;
    Timestamp crawl_date{};
    std::string content_type;
    std::string payload;
};

struct WarcDiagnostic {
    std::uint64_t offset = 0;  ///< byte offset in the (decompressed) stream
    std::string message;
};

enum class StreamOutcome { in_progress, end_of_stream, stream_error };

/// Streaming WARC 1.0/1.1 reader. Accepts plain input or gzip (single or
/// per-record members), detected from the magic bytes.
///
/// Malformed records are skipped with a diagnostic and the reader resumes at
/// the next `WARC/1.x` line. If no further boundary can be found in the
/// remaining data, or the compressed stream is corrupt, iteration stops and
/// outcome() reports stream_error.
class WarcReader {
public:
    explicit WarcReader(std::istream& in);
    ~WarcReader();
    WarcReader(const WarcReader&) = delete;
    WarcReader& operator=(const WarcReader&) = delete;

    /// Next well-formed record; nullopt once the stream is finished.
    [[nodiscard]] std::optional<WarcRecord> next();

    [[nodiscard]] StreamOutcome outcome() const noexcept;
    [[nodiscard]] const std::vector<WarcDiagnostic>& diagnostics() const noexcept;
    /// Set when outcome() == stream_error.
    [[nodiscard]] const std::optional<WarcDiagnostic>& stream_error() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct WarcParseResult {
    std::vector<WarcRecord> records;
    std::vector<WarcDiagnostic> skipped;
    StreamOutcome outcome = StreamOutcome::end_of_stream;
    std::optional<WarcDiagnostic> stream_error;
};

/// Drains a WarcReader. Handy for small inputs and tests.
[[nodiscard]] WarcParseResult parse_warc(std::istream& in);

[[nodiscard]] std::string_view to_string(RecordType type) noexcept;

}  // namespace cograph
