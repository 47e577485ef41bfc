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
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cograph/dictionary.hpp"
#include "cograph/sentences.hpp"
#include "cograph/store.hpp"

namespace cograph {

struct IngestOptions {
    std::size_t workers = 1;
    SplitOptions split;
    /// Records are handed to the store in batches of at most this size.
    std::size_t batch_size = 4096;
};

struct IngestReport {
    std::size_t files_read = 0;
    std::size_t files_failed = 0;
    std::size_t records_seen = 0;    ///< well-formed WARC records
    std::size_t text_records = 0;    ///< responses with a text/html or text/plain body
    std::size_t pages_emitted = 0;   ///< text records with non-empty text
    std::size_t records_skipped = 0;
    std::map<std::string, std::size_t> skip_reasons;
    std::size_t sentences = 0;
    std::size_t discarded_sentences = 0;
    std::size_t comentions = 0;      ///< records appended to the store
    std::vector<std::string> errors; ///< "path: message", sorted

    void merge(const IngestReport& other);
};

/// Parses every WARC file, extracts co-mention records and appends them to
/// `sink`. Files are distributed over `options.workers` threads; the final
/// store content (as a multiset) does not depend on the worker count or the
/// order of `paths`. Unreadable files are reported and skipped.
IngestReport ingest(std::span<const std::filesystem::path> paths, const PersonDictionary& dictionary,
                    RecordStore& sink, const IngestOptions& options = {});

}  // namespace cograph
