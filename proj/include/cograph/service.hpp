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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cograph/graph.hpp"
#include "cograph/store.hpp"

namespace cograph {

enum class ApiErrorCode { bad_request, not_found, internal };

struct ApiError {
    ApiErrorCode code = ApiErrorCode::internal;
    std::string message;  ///< never empty
};

[[nodiscard]] std::string_view to_string(ApiErrorCode code) noexcept;
[[nodiscard]] int http_status(ApiErrorCode code) noexcept;

struct ApiRequest {
    std::string method;  ///< "GET" / "POST"
    std::string path;    ///< without query string
    std::map<std::string, std::string> params;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

inline constexpr std::size_t kDefaultSuggestionLimit = 10;

/// Distinct store persons whose name starts with `prefix` (ASCII
/// case-insensitive), in lexicographic order, at most `limit`.
[[nodiscard]] std::vector<std::string> suggest_persons(const RecordStore& store, std::string_view prefix,
                                                       std::size_t limit);

/// Graph request body as sent to the graph and statistics endpoints.
struct GraphRequest {
    GraphQuery query;
    std::optional<int> step_days;
};

/// Validates a JSON request body. Unknown fields, wrong types and out-of-range
/// values are reported as bad_request with the offending field named.
[[nodiscard]] std::variant<GraphRequest, ApiError> parse_graph_request(std::string_view body);

/// Routes:
///   GET  /api/persons?q=&limit=
///   POST /api/graph/static
///   POST /api/graph/dynamic
///   POST /api/stats/temporal
/// Bodies are serialized deterministically: identical requests against an
/// unchanged store yield byte-identical responses. Never throws.
[[nodiscard]] ApiResponse handle_request(const RecordStore& store, const ApiRequest& request);

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;  ///< 0 picks a free port
    std::optional<std::filesystem::path> ui_dir;
};

/// HTTP/1.1 front end over handle_request, plus optional static files under `/`.
class ApiServer {
public:
    ApiServer(const RecordStore& store, ServeOptions options);
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    /// Binds the socket; returns the bound port. Throws std::runtime_error on failure.
    int bind();
    /// Blocks serving requests until stop() is called.
    void listen();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cograph
