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

#include "cograph/graph_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cograph {

double round_significant(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) {
        return value;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

nlohmann::json to_json(Period period) {
    return {{"from", format_timestamp(period.from)}, {"to", format_timestamp(period.to)}};
}

nlohmann::json to_json(const StaticGraph& graph) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : graph.nodes) {
        nodes.push_back({{"name", n.name}, {"raw", round_significant(n.raw_weight)},
                         {"norm", round_significant(n.norm_weight)}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : graph.edges) {
        edges.push_back({{"a", e.a},
                         {"b", e.b},
                         {"raw", round_significant(e.raw_weight)},
                         {"norm", round_significant(e.norm_weight)},
                         {"count", e.entry_count}});
    }
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"period", to_json(graph.period)},
            {"entries_used", graph.entries_used}};
}

nlohmann::json to_json(const DynamicGraph& graph) {
    nlohmann::json frames = nlohmann::json::array();
    for (const auto& frame : graph.frames) {
        frames.push_back(to_json(frame));
    }
    nlohmann::json out = {{"frames", std::move(frames)}, {"window_days", graph.window_days}};
    if (!graph.frames.empty()) {
        out["period"] = to_json(Period{graph.frames.front().period.from, graph.frames.back().period.to});
    }
    return out;
}

nlohmann::json to_json(const TemporalStatSeries& series) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : series.points) {
        nlohmann::json weights = nlohmann::json::object();
        for (const auto& [name, w] : p.per_person_weight) {
            weights[name] = round_significant(w);
        }
        points.push_back({{"from", format_timestamp(p.window.from)},
                          {"to", format_timestamp(p.window.to)},
                          {"raw_count", p.raw_count},
                          {"weights", std::move(weights)}});
    }
    return {{"points", std::move(points)}, {"window_days", series.window_days}, {"step_days", series.step_days}};
}

nlohmann::json to_json(const WeightHistogram& histogram) {
    nlohmann::json buckets = nlohmann::json::array();
    // descending weight, i.e. ascending n
    for (const auto& [n, count] : histogram.by_persons) {
        buckets.push_back({{"n", n}, {"weight", round_significant(WeightHistogram::weight_of(n))}, {"count", count}});
    }
    return {{"weights", std::move(buckets)}, {"total", histogram.total()}};
}

nlohmann::json to_json(const YearCounts& counts) {
    nlohmann::json years = nlohmann::json::array();
    for (const auto& [year, count] : counts.per_year) {
        years.push_back({{"year", year}, {"count", count}});
    }
    return {{"years", std::move(years)}, {"total", counts.total()}};
}

}  // namespace cograph
