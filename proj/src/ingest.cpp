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

#include "cograph/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "cograph/extractor.hpp"
#include "cograph/page_text.hpp"
#include "cograph/warc.hpp"

namespace cograph {

void IngestReport::merge(const IngestReport& other) {
    files_read += other.files_read;
    files_failed += other.files_failed;
    records_seen += other.records_seen;
    text_records += other.text_records;
    pages_emitted += other.pages_emitted;
    records_skipped += other.records_skipped;
    for (const auto& [reason, count] : other.skip_reasons) {
        skip_reasons[reason] += count;
    }
    sentences += other.sentences;
    discarded_sentences += other.discarded_sentences;
    comentions += other.comentions;
    errors.insert(errors.end(), other.errors.begin(), other.errors.end());
}

namespace {

IngestReport ingest_file(const std::filesystem::path& path, const PersonDictionary& dictionary, RecordStore& sink,
                         const IngestOptions& options) {
    IngestReport report;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        ++report.files_failed;
        report.errors.push_back(path.string() + ": not a readable regular file");
        return report;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ++report.files_failed;
        report.errors.push_back(path.string() + ": cannot open file");
        return report;
    }
    ++report.files_read;

    auto skip = [&](const char* reason) {
        ++report.records_skipped;
        ++report.skip_reasons[reason];
    };

    std::vector<CoMentionRecord> pending;
    auto flush = [&] {
        if (pending.empty()) {
            return;
        }
        sink.append(pending);
        report.comentions += pending.size();
        pending.clear();
    };

    WarcReader reader(in);
    while (auto record = reader.next()) {
        ++report.records_seen;
        if (record->record_type != RecordType::response) {
            skip("not_response");
            continue;
        }
        const auto page = extract_text(*record);
        if (!page) {
            skip("non_text");
            continue;
        }
        ++report.text_records;
        if (page->text.empty()) {
            skip("empty_text");
            continue;
        }
        ++report.pages_emitted;
        auto extraction = extract_page(*page, dictionary, options.split);
        report.sentences += extraction.sentences;
        report.discarded_sentences += extraction.discarded_sentences;
        for (auto& r : extraction.records) {
            pending.push_back(std::move(r));
        }
        if (pending.size() >= options.batch_size) {
            flush();
        }
    }
    flush();

    if (const auto malformed = reader.diagnostics().size(); malformed > 0) {
        report.records_skipped += malformed;
        report.skip_reasons["malformed"] += malformed;
    }
    if (reader.outcome() == StreamOutcome::stream_error && reader.stream_error()) {
        ++report.skip_reasons["stream_error"];
        report.errors.push_back(path.string() + ": offset " + std::to_string(reader.stream_error()->offset) + ": " +
                                reader.stream_error()->message);
    }
    return report;
}

}  // namespace

IngestReport ingest(std::span<const std::filesystem::path> paths, const PersonDictionary& dictionary,
                    RecordStore& sink, const IngestOptions& options) {
    IngestReport total;
    if (paths.empty()) {
        return total;
    }
    std::mutex report_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= paths.size()) {
                return;
            }
            IngestReport part;
            try {
                part = ingest_file(paths[i], dictionary, sink, options);
            } catch (const std::exception& e) {
                ++part.files_failed;
                part.errors.push_back(paths[i].string() + ": " + e.what());
            }
            std::lock_guard lock(report_mutex);
            total.merge(part);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, paths.size());
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    std::sort(total.errors.begin(), total.errors.end());
    return total;
}

}  // namespace cograph
