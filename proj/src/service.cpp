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

#include "cograph/service.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "cograph/graph_json.hpp"
#include "cograph/text_util.hpp"
#include "httplib.h"
#include "json.hpp"

namespace cograph {

namespace {

using nlohmann::json;

// Hard cap on windows per request; beyond this a request is rejected.
constexpr std::size_t kMaxWindows = 100000;

ApiResponse error_response(const ApiError& error) {
    ApiResponse response;
    response.status = http_status(error.code);
    response.body = json{{"error", {{"code", std::string(to_string(error.code))}, {"message", error.message}}}}
                        .dump(-1, ' ', false, json::error_handler_t::replace);
    return response;
}

ApiResponse ok(const json& body) {
    ApiResponse response;
    response.body = body.dump(-1, ' ', false, json::error_handler_t::replace);
    return response;
}

ApiError bad_request(std::string message) { return {ApiErrorCode::bad_request, std::move(message)}; }

std::optional<int> parse_positive_int(const json& value) {
    if (!value.is_number_integer()) {
        return std::nullopt;
    }
    if (value.is_number_unsigned()) {
        const auto v = value.get<std::uint64_t>();
        if (v < 1 || v > 1000000000ULL) {
            return std::nullopt;
        }
        return static_cast<int>(v);
    }
    const auto v = value.get<std::int64_t>();
    if (v < 1 || v > 1000000000LL) {
        return std::nullopt;
    }
    return static_cast<int>(v);
}

std::optional<double> parse_unit_interval(const json& value) {
    if (!value.is_number()) {
        return std::nullopt;
    }
    const double v = value.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
        return std::nullopt;
    }
    return v;
}

std::size_t window_count(Period period, int step_days) {
    const auto span = period.to - period.from;
    const auto step = std::chrono::duration_cast<std::chrono::seconds>(Days{step_days});
    return static_cast<std::size_t>((span + step - std::chrono::seconds{1}) / step);
}

ApiResponse run_graph(const RecordStore& store, const ApiRequest& request, std::string_view kind) {
    auto parsed = parse_graph_request(request.body);
    if (const auto* error = std::get_if<ApiError>(&parsed)) {
        return error_response(*error);
    }
    const auto& graph_request = std::get<GraphRequest>(parsed);
    const GraphQuery& query = graph_request.query;

    if (kind != "static" && !query.window_days) {
        return error_response(bad_request("window_days is required for this endpoint"));
    }
    if (query.window_days && window_count(query.period, *query.window_days) > kMaxWindows) {
        return error_response(bad_request("window_days too small for the requested period"));
    }
    if (kind == "temporal") {
        const int step = graph_request.step_days.value_or(*query.window_days);
        if (window_count(query.period, step) > kMaxWindows) {
            return error_response(bad_request("step_days too small for the requested period"));
        }
    }

    const auto entries = store.query_entries(query.persons, query.period);
    if (kind == "static") {
        return ok(to_json(build_static(entries, query)));
    }
    if (kind == "dynamic") {
        return ok(to_json(build_dynamic(entries, query)));
    }
    const int step = graph_request.step_days.value_or(*query.window_days);
    return ok(to_json(temporal_stats(entries, query, *query.window_days, step)));
}

ApiResponse run_persons(const RecordStore& store, const ApiRequest& request) {
    std::string prefix;
    std::size_t limit = kDefaultSuggestionLimit;
    for (const auto& [key, value] : request.params) {
        if (key == "q") {
            prefix = value;
        } else if (key == "limit") {
            int parsed = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
            if (ec != std::errc{} || ptr != value.data() + value.size() || parsed < 1 || parsed > 10000) {
                return error_response(bad_request("limit: expected an integer in [1, 10000]"));
            }
            limit = static_cast<std::size_t>(parsed);
        } else {
            return error_response(bad_request("unknown query parameter: " + key));
        }
    }
    return ok(json(suggest_persons(store, prefix, limit)));
}

}  // namespace

std::string_view to_string(ApiErrorCode code) noexcept {
    switch (code) {
        case ApiErrorCode::bad_request:
            return "bad_request";
        case ApiErrorCode::not_found:
            return "not_found";
        case ApiErrorCode::internal:
            break;
    }
    return "internal";
}

int http_status(ApiErrorCode code) noexcept {
    switch (code) {
        case ApiErrorCode::bad_request:
            return 400;
        case ApiErrorCode::not_found:
            return 404;
        case ApiErrorCode::internal:
            break;
    }
    return 500;
}

std::vector<std::string> suggest_persons(const RecordStore& store, std::string_view prefix, std::size_t limit) {
    std::vector<std::string> out;
    if (limit == 0) {
        return out;
    }
    for (auto& name : store.persons()) {
        if (istarts_with(name, prefix)) {
            out.push_back(std::move(name));
            if (out.size() == limit) {
                break;
            }
        }
    }
    return out;
}

std::variant<GraphRequest, ApiError> parse_graph_request(std::string_view body) {
    json doc;
    try {
        doc = json::parse(body);
    } catch (const json::parse_error& e) {
        return bad_request(std::string("invalid JSON body: ") + e.what());
    }
    if (!doc.is_object()) {
        return bad_request("request body must be a JSON object");
    }
    static const std::set<std::string> kKnown = {"persons",          "from",           "to",          "max_entries",
                                                 "min_entry_weight", "min_edge_weight", "window_days", "step_days"};
    for (const auto& [key, value] : doc.items()) {
        if (!kKnown.contains(key)) {
            return bad_request("unknown field: " + key);
        }
    }

    GraphRequest request;
    GraphQuery& query = request.query;

    const auto persons = doc.find("persons");
    if (persons == doc.end() || !persons->is_array()) {
        return bad_request("persons: expected a non-empty array of names");
    }
    for (const auto& p : *persons) {
        if (!p.is_string() || trim_ascii(p.get_ref<const std::string&>()).empty()) {
            return bad_request("persons: every entry must be a non-empty string");
        }
        query.persons.push_back(p.get<std::string>());
    }
    if (query.persons.empty()) {
        return bad_request("persons: expected a non-empty array of names");
    }

    for (const char* key : {"from", "to"}) {
        const auto it = doc.find(key);
        if (it == doc.end() || !it->is_string()) {
            return bad_request(std::string(key) + ": expected a date string YYYY-MM-DD");
        }
        const auto date = parse_date(it->get_ref<const std::string&>());
        if (!date) {
            return bad_request(std::string(key) + ": invalid date " + it->get<std::string>());
        }
        (std::string_view(key) == "from" ? query.period.from : query.period.to) = *date;
    }
    if (!query.period.valid()) {
        return bad_request("from must be earlier than to");
    }

    if (const auto it = doc.find("max_entries"); it != doc.end() && !it->is_null()) {
        const auto v = parse_positive_int(*it);
        if (!v) {
            return bad_request("max_entries: expected a positive integer");
        }
        query.max_entries = static_cast<std::size_t>(*v);
    }
    for (const char* key : {"min_entry_weight", "min_edge_weight"}) {
        if (const auto it = doc.find(key); it != doc.end() && !it->is_null()) {
            const auto v = parse_unit_interval(*it);
            if (!v) {
                return bad_request(std::string(key) + ": expected a number within [0, 1]");
            }
            (std::string_view(key) == "min_entry_weight" ? query.min_entry_weight : query.min_edge_weight) = *v;
        }
    }
    if (const auto it = doc.find("window_days"); it != doc.end() && !it->is_null()) {
        const auto v = parse_positive_int(*it);
        if (!v) {
            return bad_request("window_days: expected a positive integer");
        }
        query.window_days = *v;
    }
    if (const auto it = doc.find("step_days"); it != doc.end() && !it->is_null()) {
        const auto v = parse_positive_int(*it);
        if (!v) {
            return bad_request("step_days: expected a positive integer");
        }
        request.step_days = *v;
    }
    return request;
}

ApiResponse handle_request(const RecordStore& store, const ApiRequest& request) {
    try {
        const bool get = request.method == "GET";
        const bool post = request.method == "POST";
        if (request.path == "/api/persons" && get) {
            return run_persons(store, request);
        }
        if (request.path == "/api/graph/static" && post) {
            return run_graph(store, request, "static");
        }
        if (request.path == "/api/graph/dynamic" && post) {
            return run_graph(store, request, "dynamic");
        }
        if (request.path == "/api/stats/temporal" && post) {
            return run_graph(store, request, "temporal");
        }
        return error_response({ApiErrorCode::not_found, "no route for " + request.method + " " + request.path});
    } catch (const std::invalid_argument& e) {
        return error_response(bad_request(e.what()));
    } catch (const std::exception& e) {
        return error_response({ApiErrorCode::internal, std::string("internal error: ") + e.what()});
    } catch (...) {
        return error_response({ApiErrorCode::internal, "internal error"});
    }
}

struct ApiServer::Impl {
    Impl(const RecordStore& s, ServeOptions o) : store(s), options(std::move(o)) {}
    const RecordStore& store;
    ServeOptions options;
    httplib::Server server;
    int port = 0;
};

ApiServer::ApiServer(const RecordStore& store, ServeOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
    auto& server = impl_->server;
    const RecordStore& s = impl_->store;
    auto bridge = [&s](const httplib::Request& req, httplib::Response& res) {
        ApiRequest api;
        api.method = req.method;
        api.path = req.path;
        for (const auto& [key, value] : req.params) {
            api.params[key] = value;
        }
        api.body = req.body;
        const ApiResponse out = handle_request(s, api);
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    };
    server.Get(R"(/api/.*)", bridge);
    server.Post(R"(/api/.*)", bridge);
    if (impl_->options.ui_dir) {
        if (!server.set_mount_point("/", impl_->options.ui_dir->string())) {
            throw std::runtime_error("UI directory not found: " + impl_->options.ui_dir->string());
        }
    }
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind() {
    auto& impl = *impl_;
    if (impl.options.port == 0) {
        impl.port = impl.server.bind_to_any_port(impl.options.host);
    } else {
        impl.port = impl.server.bind_to_port(impl.options.host, impl.options.port) ? impl.options.port : -1;
    }
    if (impl.port <= 0) {
        throw std::runtime_error("cannot bind " + impl.options.host + ":" + std::to_string(impl.options.port));
    }
    return impl.port;
}

void ApiServer::listen() { impl_->server.listen_after_bind(); }

void ApiServer::stop() {
    if (impl_ && impl_->server.is_running()) {
        impl_->server.stop();
    }
}

void ApiServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace cograph
