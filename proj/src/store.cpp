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

#include "cograph/store.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>

#include "json.hpp"

namespace cograph {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::string& string_field(const nlohmann::json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw StoreError(std::string("field \"") + key + "\" must be a string");
    }
    return it->get_ref<const std::string&>();
}

}  // namespace

std::size_t WeightHistogram::total() const noexcept {
    std::size_t sum = 0;
    for (const auto& [n, count] : by_persons) {
        sum += count;
    }
    return sum;
}

std::size_t YearCounts::total() const noexcept {
    std::size_t sum = 0;
    for (const auto& [year, count] : per_year) {
        sum += count;
    }
    return sum;
}

std::string to_ndjson_line(const CoMentionRecord& record) {
    ordered_json j;
    j["a"] = record.person_a;
    j["b"] = record.person_b;
    j["pattern"] = record.pattern;
    j["n"] = record.n_persons;
    j["url"] = record.url;
    j["date"] = format_timestamp(record.crawl_date);
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

CoMentionRecord parse_ndjson_line(std::string_view line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw StoreError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.size() != 6) {
        throw StoreError("record must be an object with exactly a, b, pattern, n, url, date");
    }
    CoMentionRecord record;
    record.person_a = string_field(j, "a");
    record.person_b = string_field(j, "b");
    record.pattern = string_field(j, "pattern");
    record.url = string_field(j, "url");
    const auto n = j.find("n");
    if (n == j.end() || !n->is_number_integer()) {
        throw StoreError("field \"n\" must be an integer");
    }
    record.n_persons = n->get<int>();
    const std::string& date = string_field(j, "date");
    const auto parsed = parse_timestamp(date);
    if (!parsed || format_timestamp(*parsed) != date) {
        throw StoreError("field \"date\" must be YYYY-MM-DDTHH:MM:SSZ, got " + date);
    }
    record.crawl_date = *parsed;
    return record;
}

RecordStore::RecordStore(const std::filesystem::path& dir) : dir_(dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw StoreError("cannot create store directory " + dir.string() + ": " + ec.message());
    }
    const auto file = dir / kFileName;
    if (!std::filesystem::exists(file)) {
        return;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw StoreError("cannot read " + file.string());
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            CoMentionRecord record = parse_ndjson_line(line);
            validate(record);
            publish(std::move(record));
        } catch (const StoreError& e) {
            throw StoreError(file.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void RecordStore::validate(const CoMentionRecord& record) {
    if (record.person_a.empty() || record.person_b.empty()) {
        throw StoreError("person names must be non-empty");
    }
    if (!(record.person_a < record.person_b)) {
        throw StoreError("person_a must sort strictly before person_b: " + record.person_a + " / " +
                         record.person_b);
    }
    if (record.n_persons < 2) {
        throw StoreError("n must be at least 2");
    }
}

void RecordStore::publish(CoMentionRecord record) {
    const RecordId id = records_.size() + 1;
    record.record_id = id;
    person_index_[record.person_a].push_back(id);
    person_index_[record.person_b].push_back(id);
    date_index_.emplace(record.crawl_date, id);
    records_.push_back(std::move(record));
}

std::vector<RecordId> RecordStore::append(std::span<const CoMentionRecord> batch) {
    for (const auto& record : batch) {
        validate(record);
    }
    std::vector<RecordId> ids;
    if (batch.empty()) {
        return ids;
    }
    std::unique_lock lock(mutex_);
    if (dir_) {
        std::string lines;
        for (const auto& record : batch) {
            lines += to_ndjson_line(record);
            lines += '\n';
        }
        const auto file = *dir_ / kFileName;
        std::error_code ec;
        const auto old_size = std::filesystem::exists(file) ? std::filesystem::file_size(file, ec) : 0;
        std::ofstream out(file, std::ios::binary | std::ios::app);
        out.write(lines.data(), static_cast<std::streamsize>(lines.size()));
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::resize_file(file, old_size, ec);
            throw StoreError("failed to write " + file.string());
        }
    }
    ids.reserve(batch.size());
    for (const auto& record : batch) {
        publish(record);
        ids.push_back(records_.back().record_id);
    }
    return ids;
}

std::vector<CoMentionRecord> RecordStore::query_entries(std::span<const std::string> persons, Period period,
                                                        std::optional<std::size_t> limit) const {
    if (persons.empty()) {
        throw std::invalid_argument("query must name at least one person");
    }
    if (!period.valid()) {
        throw std::invalid_argument("query period must satisfy from < to");
    }
    std::shared_lock lock(mutex_);

    const std::set<std::string_view> wanted(persons.begin(), persons.end());
    std::size_t person_hits = 0;
    for (auto name : wanted) {
        if (const auto it = person_index_.find(std::string(name)); it != person_index_.end()) {
            person_hits += it->second.size();
        }
    }

    std::vector<RecordId> ids;
    if (person_hits * 4 <= records_.size()) {
        for (auto name : wanted) {
            const auto it = person_index_.find(std::string(name));
            if (it == person_index_.end()) {
                continue;
            }
            for (const RecordId id : it->second) {
                if (period.contains(records_[id - 1].crawl_date)) {
                    ids.push_back(id);
                }
            }
        }
        std::sort(ids.begin(), ids.end(), [this](RecordId x, RecordId y) {
            const auto& rx = records_[x - 1];
            const auto& ry = records_[y - 1];
            return std::pair(rx.crawl_date, x) < std::pair(ry.crawl_date, y);
        });
        // a record mentioning two queried persons was collected twice
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    } else {
        auto it = date_index_.lower_bound({period.from, 0});
        for (; it != date_index_.end() && it->first < period.to; ++it) {
            const auto& record = records_[it->second - 1];
            if (wanted.contains(record.person_a) || wanted.contains(record.person_b)) {
                ids.push_back(it->second);
            }
        }
    }

    if (limit && ids.size() > *limit) {
        ids.resize(*limit);
    }
    std::vector<CoMentionRecord> out;
    out.reserve(ids.size());
    for (const RecordId id : ids) {
        out.push_back(records_[id - 1]);
    }
    return out;
}

std::size_t RecordStore::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

std::vector<CoMentionRecord> RecordStore::snapshot() const {
    std::shared_lock lock(mutex_);
    return records_;
}

std::optional<CoMentionRecord> RecordStore::get(RecordId id) const {
    std::shared_lock lock(mutex_);
    if (id == 0 || id > records_.size()) {
        return std::nullopt;
    }
    return records_[id - 1];
}

std::vector<std::string> RecordStore::persons() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> names;
    names.reserve(person_index_.size());
    for (const auto& [name, ids] : person_index_) {
        names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    return names;
}

WeightHistogram RecordStore::weight_histogram() const {
    std::shared_lock lock(mutex_);
    WeightHistogram histogram;
    for (const auto& record : records_) {
        ++histogram.by_persons[record.n_persons];
    }
    return histogram;
}

YearCounts RecordStore::edges_per_year() const {
    std::shared_lock lock(mutex_);
    YearCounts counts;
    for (const auto& record : records_) {
        ++counts.per_year[utc_year(record.crawl_date)];
    }
    return counts;
}

void RecordStore::export_ndjson(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    for (const auto& record : records_) {
        out << to_ndjson_line(record) << '\n';
    }
}

std::size_t RecordStore::import_ndjson(std::istream& in) {
    std::vector<CoMentionRecord> batch;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            batch.push_back(parse_ndjson_line(line));
            validate(batch.back());
        } catch (const StoreError& e) {
            throw StoreError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    append(batch);
    return batch.size();
}

}  // namespace cograph
