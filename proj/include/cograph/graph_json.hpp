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

#include "cograph/graph.hpp"
#include "cograph/store.hpp"
#include "json.hpp"

namespace cograph {

/// Rounds to 12 significant digits so exported numbers print identically on
/// every run and platform.
[[nodiscard]] double round_significant(double value, int digits = 12);

/// {nodes:[{name,raw,norm}], edges:[{a,b,raw,norm,count}], period:{from,to}}
[[nodiscard]] nlohmann::json to_json(const StaticGraph& graph);
/// {frames:[static...], period:{from,to}, window_days}
[[nodiscard]] nlohmann::json to_json(const DynamicGraph& graph);
/// {points:[{from,to,raw_count,weights:{name:w}}], window_days, step_days}
[[nodiscard]] nlohmann::json to_json(const TemporalStatSeries& series);

/// {"weights":[{"n":2,"weight":0.5,"count":..}...]}
[[nodiscard]] nlohmann::json to_json(const WeightHistogram& histogram);
/// {"years":[{"year":2008,"count":..}...]}
[[nodiscard]] nlohmann::json to_json(const YearCounts& counts);

[[nodiscard]] nlohmann::json to_json(Period period);

}  // namespace cograph
