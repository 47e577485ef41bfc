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
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cograph/record.hpp"
#include "cograph/timestamp.hpp"

namespace cograph {

class StoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Count of records per distinct entry weight. Keys are the person count n;
/// the weight of a bucket is 1/n.
struct WeightHistogram {
    std::map<int, std::size_t> by_persons;

    [[nodiscard]] static double weight_of(int n_persons) noexcept { return 1.0 / n_persons; }
    [[nodiscard]] std::size_t total() const noexcept;
    friend bool operator==(const WeightHistogram&, const WeightHistogram&) = default;
};

struct YearCounts {
    std::map<int, std::size_t> per_year;

    [[nodiscard]] std::size_t total() const noexcept;
    friend bool operator==(const YearCounts&, const YearCounts&) = default;
};

/// Interchange line: {"a","b","pattern","n","url","date"} in that key order.
[[nodiscard]] std::string to_ndjson_line(const CoMentionRecord& record);
/// Throws StoreError on anything but an exact interchange object.
[[nodiscard]] CoMentionRecord parse_ndjson_line(std::string_view line);

/// Append-only co-mention store with a person index and a (date, id) index.
///
/// Readers take a shared lock, appends an exclusive one, so a query never
/// observes part of a batch. When backed by a directory, every batch is
/// written to `records.ndjson` before it becomes visible; a failed write is
/// rolled back and nothing is published.
class RecordStore {
public:
    static constexpr std::string_view kFileName = "records.ndjson";

    /// In-memory store.
    RecordStore() = default;
    /// Directory-backed store; creates the directory and loads existing records.
    explicit RecordStore(const std::filesystem::path& dir);

    RecordStore(const RecordStore&) = delete;
    RecordStore& operator=(const RecordStore&) = delete;

    /// Ids are assigned in call order starting at 1. Throws StoreError (and
    /// stores nothing) if any record is invalid or the write fails.
    std::vector<RecordId> append(std::span<const CoMentionRecord> batch);

    /// Records with person_a or person_b in `persons` and crawl_date in
    /// `period`, ordered by (crawl_date, record_id), truncated to `limit`.
    /// Throws std::invalid_argument for an empty person list or empty period.
    [[nodiscard]] std::vector<CoMentionRecord> query_entries(std::span<const std::string> persons, Period period,
                                                             std::optional<std::size_t> limit = {}) const;

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::vector<CoMentionRecord> snapshot() const;
    [[nodiscard]] std::optional<CoMentionRecord> get(RecordId id) const;
    /// Distinct person names, lexicographic.
    [[nodiscard]] std::vector<std::string> persons() const;

    [[nodiscard]] WeightHistogram weight_histogram() const;
    [[nodiscard]] YearCounts edges_per_year() const;

    /// Writes all records in id order, one interchange line each.
    void export_ndjson(std::ostream& out) const;
    /// Appends every line of `in` as a single batch; returns the count.
    std::size_t import_ndjson(std::istream& in);

    [[nodiscard]] const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

private:
    static void validate(const CoMentionRecord& record);
    void publish(CoMentionRecord record);

    mutable std::shared_mutex mutex_;
    std::optional<std::filesystem::path> dir_;
    std::vector<CoMentionRecord> records_;  // records_[id - 1]
    std::unordered_map<std::string, std::vector<RecordId>> person_index_;
    std::set<std::pair<Timestamp, RecordId>> date_index_;
};

}  // namespace cograph
