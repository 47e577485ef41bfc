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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/record.hpp"
#include "cograph/timestamp.hpp"

namespace cograph {

/// Query parameters shared by static graphs, dynamic graphs and temporal
/// statistics.
struct GraphQuery {
    std::vector<std::string> persons;
    Period period;
    std::optional<std::size_t> max_entries;
    double min_entry_weight = 0.0;  ///< on the raw entry weight 1/n
    double min_edge_weight = 0.0;   ///< on the normalized edge weight
    std::optional<int> window_days;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct GraphNode {
    std::string name;
    double raw_weight = 0.0;   ///< sum of 1/n over the person's entries
    double norm_weight = 0.0;  ///< raw / normalization divisor
};

struct GraphEdge {
    std::string a;  ///< a < b
    std::string b;
    double raw_weight = 0.0;  ///< sum of (1/n + 1/n) = 2/n over the pair's entries
    double norm_weight = 0.0;
    std::size_t entry_count = 0;
};

struct StaticGraph {
    std::vector<GraphNode> nodes;  ///< sorted by name
    std::vector<GraphEdge> edges;  ///< sorted by (a, b)
    Period period;
    std::size_t entries_used = 0;  ///< entries that passed truncation and the entry-weight filter

    [[nodiscard]] const GraphNode* find_node(std::string_view name) const;
    [[nodiscard]] const GraphEdge* find_edge(std::string_view x, std::string_view y) const;
    [[nodiscard]] bool empty() const noexcept { return nodes.empty(); }
};

struct DynamicGraph {
    std::vector<StaticGraph> frames;
    int window_days = 0;
};

struct TemporalPoint {
    Period window;
    std::size_t raw_count = 0;
    std::map<std::string, double> per_person_weight;
};

struct TemporalStatSeries {
    std::vector<TemporalPoint> points;
    int window_days = 0;
    int step_days = 0;
};

/// Consecutive [start, start + window_days) intervals from period.from; the
/// last one is cut at period.to.
[[nodiscard]] std::vector<Period> partition_period(Period period, int window_days);

/// Aggregates `entries` (already restricted to the query persons and period,
/// chronological) into a weighted graph:
///   1. keep the first max_entries entries;
///   2. normalization divisors = largest node and edge sums over those entries;
///   3. drop entries with weight < min_entry_weight;
///   4. node += w for both endpoints, edge += 2w;
///   5. drop edges whose normalized weight < min_edge_weight;
///   6. drop nodes without edges, except queried persons that kept an entry.
/// Taking the divisors before step 3 makes every threshold monotone: raising
/// one never adds nodes, edges or weight.
[[nodiscard]] StaticGraph build_static(std::span<const CoMentionRecord> entries, const GraphQuery& query);

/// One static graph per window_days interval, max_entries applied per frame,
/// divisors shared by all frames so node sizes compare across the sequence.
/// Throws std::invalid_argument if query.window_days is absent.
[[nodiscard]] DynamicGraph build_dynamic(std::span<const CoMentionRecord> entries, const GraphQuery& query);

/// Sliding windows of window_days starting every step_days from
/// period.from; each point counts entries passing min_entry_weight and sums
/// their weights per queried person.
[[nodiscard]] TemporalStatSeries temporal_stats(std::span<const CoMentionRecord> entries, const GraphQuery& query,
                                                int window_days, int step_days);

}  // namespace cograph
