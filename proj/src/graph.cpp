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

#include "cograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace cograph {

namespace {

using EdgeKey = std::pair<std::string, std::string>;

struct EdgeSum {
    double raw = 0.0;
    std::size_t count = 0;
};

// Per-interval sums before normalization.
struct Aggregate {
    Period period;
    std::map<std::string, double> node_raw;
    std::map<EdgeKey, EdgeSum> edge_raw;
    std::set<std::string> persons_with_entries;
    double node_divisor = 0.0;
    double edge_divisor = 0.0;
    std::size_t entries_used = 0;
};

bool chronological(const CoMentionRecord& x, const CoMentionRecord& y) {
    return std::pair(x.crawl_date, x.record_id) < std::pair(y.crawl_date, y.record_id);
}

Aggregate aggregate(std::span<const CoMentionRecord> entries, const GraphQuery& query, Period period) {
    Aggregate agg;
    agg.period = period;
    const std::size_t considered = query.max_entries ? std::min(*query.max_entries, entries.size()) : entries.size();

    std::map<std::string, double> all_nodes;
    std::map<EdgeKey, double> all_edges;
    for (std::size_t i = 0; i < considered; ++i) {
        const auto& e = entries[i];
        const double w = e.weight();
        all_nodes[e.person_a] += w;
        all_nodes[e.person_b] += w;
        all_edges[{e.person_a, e.person_b}] += w + w;
        if (w < query.min_entry_weight) {
            continue;
        }
        agg.node_raw[e.person_a] += w;
        agg.node_raw[e.person_b] += w;
        auto& edge = agg.edge_raw[{e.person_a, e.person_b}];
        edge.raw += w + w;
        ++edge.count;
        agg.persons_with_entries.insert(e.person_a);
        agg.persons_with_entries.insert(e.person_b);
        ++agg.entries_used;
    }
    for (const auto& [name, raw] : all_nodes) {
        agg.node_divisor = std::max(agg.node_divisor, raw);
    }
    for (const auto& [key, raw] : all_edges) {
        agg.edge_divisor = std::max(agg.edge_divisor, raw);
    }
    return agg;
}

StaticGraph finalize(const Aggregate& agg, const GraphQuery& query, double node_divisor, double edge_divisor) {
    StaticGraph graph;
    graph.period = agg.period;
    graph.entries_used = agg.entries_used;

    std::set<std::string> connected;
    for (const auto& [key, sum] : agg.edge_raw) {
        const double norm = sum.raw / edge_divisor;
        if (norm < query.min_edge_weight) {
            continue;
        }
        graph.edges.push_back({key.first, key.second, sum.raw, norm, sum.count});
        connected.insert(key.first);
        connected.insert(key.second);
    }
    const std::set<std::string> queried(query.persons.begin(), query.persons.end());
    for (const auto& [name, raw] : agg.node_raw) {
        const bool keep = connected.contains(name) || (queried.contains(name) && agg.persons_with_entries.contains(name));
        if (keep) {
            graph.nodes.push_back({name, raw, raw / node_divisor});
        }
    }
    return graph;
}

std::vector<CoMentionRecord> sorted_copy(std::span<const CoMentionRecord> entries) {
    std::vector<CoMentionRecord> sorted(entries.begin(), entries.end());
    if (!std::is_sorted(sorted.begin(), sorted.end(), chronological)) {
        std::stable_sort(sorted.begin(), sorted.end(), chronological);
    }
    return sorted;
}

}  // namespace

void GraphQuery::validate() const {
    if (persons.empty()) {
        throw std::invalid_argument("persons must not be empty");
    }
    for (const auto& p : persons) {
        if (p.empty()) {
            throw std::invalid_argument("person names must not be empty");
        }
    }
    if (!period.valid()) {
        throw std::invalid_argument("period requires from < to");
    }
    if (!(min_entry_weight >= 0.0 && min_entry_weight <= 1.0)) {
        throw std::invalid_argument("min_entry_weight must be within [0, 1]");
    }
    if (!(min_edge_weight >= 0.0 && min_edge_weight <= 1.0)) {
        throw std::invalid_argument("min_edge_weight must be within [0, 1]");
    }
    if (window_days && *window_days < 1) {
        throw std::invalid_argument("window_days must be >= 1");
    }
}

const GraphNode* StaticGraph::find_node(std::string_view name) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), name,
                                     [](const GraphNode& n, std::string_view v) { return n.name < v; });
    return it != nodes.end() && it->name == name ? &*it : nullptr;
}

const GraphEdge* StaticGraph::find_edge(std::string_view x, std::string_view y) const {
    if (y < x) {
        std::swap(x, y);
    }
    for (const auto& e : edges) {
        if (e.a == x && e.b == y) {
            return &e;
        }
    }
    return nullptr;
}

std::vector<Period> partition_period(Period period, int window_days) {
    if (window_days < 1) {
        throw std::invalid_argument("window_days must be >= 1");
    }
    std::vector<Period> out;
    const auto step = std::chrono::duration_cast<std::chrono::seconds>(Days{window_days});
    for (Timestamp start = period.from; start < period.to; start += step) {
        out.push_back({start, std::min(start + step, period.to)});
    }
    return out;
}

StaticGraph build_static(std::span<const CoMentionRecord> entries, const GraphQuery& query) {
    const auto sorted = sorted_copy(entries);
    const Aggregate agg = aggregate(sorted, query, query.period);
    return finalize(agg, query, agg.node_divisor, agg.edge_divisor);
}

DynamicGraph build_dynamic(std::span<const CoMentionRecord> entries, const GraphQuery& query) {
    if (!query.window_days) {
        throw std::invalid_argument("dynamic graphs require window_days");
    }
    const auto sorted = sorted_copy(entries);
    const auto frames = partition_period(query.period, *query.window_days);

    std::vector<Aggregate> aggregates;
    aggregates.reserve(frames.size());
    double node_divisor = 0.0;
    double edge_divisor = 0.0;
    for (const auto& frame : frames) {
        const auto lo = std::lower_bound(sorted.begin(), sorted.end(), frame.from,
                                         [](const CoMentionRecord& r, Timestamp t) { return r.crawl_date < t; });
        const auto hi = std::lower_bound(lo, sorted.end(), frame.to,
                                         [](const CoMentionRecord& r, Timestamp t) { return r.crawl_date < t; });
        aggregates.push_back(aggregate(std::span(lo, hi), query, frame));
        node_divisor = std::max(node_divisor, aggregates.back().node_divisor);
        edge_divisor = std::max(edge_divisor, aggregates.back().edge_divisor);
    }

    DynamicGraph graph;
    graph.window_days = *query.window_days;
    graph.frames.reserve(aggregates.size());
    for (const auto& agg : aggregates) {
        graph.frames.push_back(finalize(agg, query, node_divisor, edge_divisor));
    }
    return graph;
}

TemporalStatSeries temporal_stats(std::span<const CoMentionRecord> entries, const GraphQuery& query, int window_days,
                                  int step_days) {
    if (window_days < 1 || step_days < 1) {
        throw std::invalid_argument("window_days and step_days must be >= 1");
    }
    const auto sorted = sorted_copy(entries);
    const auto window = std::chrono::duration_cast<std::chrono::seconds>(Days{window_days});
    const auto step = std::chrono::duration_cast<std::chrono::seconds>(Days{step_days});

    TemporalStatSeries series;
    series.window_days = window_days;
    series.step_days = step_days;
    for (Timestamp start = query.period.from; start < query.period.to; start += step) {
        TemporalPoint point;
        point.window = {start, std::min(start + window, query.period.to)};
        for (const auto& person : query.persons) {
            point.per_person_weight[person] = 0.0;
        }
        const auto lo = std::lower_bound(sorted.begin(), sorted.end(), point.window.from,
                                         [](const CoMentionRecord& r, Timestamp t) { return r.crawl_date < t; });
        for (auto it = lo; it != sorted.end() && it->crawl_date < point.window.to; ++it) {
            const double w = it->weight();
            if (w < query.min_entry_weight) {
                continue;
            }
            ++point.raw_count;
            for (auto& [person, sum] : point.per_person_weight) {
                if (it->involves(person)) {
                    sum += w;
                }
            }
        }
        series.points.push_back(std::move(point));
    }
    return series;
}

}  // namespace cograph
