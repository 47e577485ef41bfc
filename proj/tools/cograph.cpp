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

// cograph: ingest WARC files into a co-mention store, inspect it, build
// graphs and serve the HTTP API.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cograph/dictionary.hpp"
#include "cograph/graph.hpp"
#include "cograph/graph_json.hpp"
#include "cograph/ingest.hpp"
#include "cograph/service.hpp"
#include "cograph/store.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

cograph::ApiServer* g_server = nullptr;

void on_signal(int) {
    if (g_server != nullptr) {
        g_server->stop();
    }
}

struct DateValidator : CLI::Validator {
    DateValidator() {
        name_ = "DATE";
        func_ = [](const std::string& s) -> std::string {
            return cograph::parse_date(s) ? std::string{} : "expected YYYY-MM-DD, got " + s;
        };
    }
};

nlohmann::json report_json(const cograph::IngestReport& r) {
    return {{"files_read", r.files_read},
            {"files_failed", r.files_failed},
            {"records_seen", r.records_seen},
            {"text_records", r.text_records},
            {"pages_emitted", r.pages_emitted},
            {"records_skipped", r.records_skipped},
            {"skip_reasons", r.skip_reasons},
            {"sentences", r.sentences},
            {"discarded_sentences", r.discarded_sentences},
            {"comentions", r.comentions},
            {"errors", r.errors}};
}

bool write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Person co-mention graphs from web archives"};
    app.require_subcommand(1);

    std::string store_dir;

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Extract co-mentions from WARC files into a store");
    std::string dict_path;
    std::vector<std::string> warcs;
    std::size_t workers = 1;
    std::size_t max_tokens = 60;
    ingest->add_option("--dict", dict_path, "Person dictionary, one name per line")->required()->check(CLI::ExistingFile);
    ingest->add_option("--store", store_dir, "Store directory")->required();
    ingest->add_option("--workers", workers, "Parallel file workers")->check(CLI::Range(1, 256));
    ingest->add_option("--max-sentence-tokens", max_tokens, "Longer sentences are discarded")->check(CLI::Range(1, 100000));
    ingest->add_option("warc", warcs, "WARC or WARC.gz files")->required();

    // export
    auto* exporter = app.add_subcommand("export", "Write the store as NDJSON");
    std::string out_path;
    exporter->add_option("--store", store_dir, "Store directory")->required()->check(CLI::ExistingDirectory);
    exporter->add_option("--out", out_path, "Output file, '-' for stdout")->required();

    // import
    auto* importer = app.add_subcommand("import", "Append NDJSON records to a store");
    std::string ndjson_path;
    importer->add_option("--store", store_dir, "Store directory")->required();
    importer->add_option("ndjson", ndjson_path, "NDJSON file")->required()->check(CLI::ExistingFile);

    // stats
    auto* stats = app.add_subcommand("stats", "Corpus statistics");
    bool weights = false;
    bool per_year = false;
    stats->add_option("--store", store_dir, "Store directory")->required()->check(CLI::ExistingDirectory);
    auto* weights_flag = stats->add_flag("--weights", weights, "Distribution of the weight per entry");
    auto* year_flag = stats->add_flag("--per-year", per_year, "Number of extracted edges per year");
    weights_flag->excludes(year_flag);

    // graph
    auto* graph = app.add_subcommand("graph", "Build a static or dynamic graph");
    std::vector<std::string> persons;
    std::string from;
    std::string to;
    std::optional<std::size_t> max_entries;
    double min_entry_weight = 0.0;
    double min_edge_weight = 0.0;
    std::optional<int> window_days;
    graph->add_option("--store", store_dir, "Store directory")->required()->check(CLI::ExistingDirectory);
    graph->add_option("--person", persons, "Person of interest (repeatable)")->required();
    graph->add_option("--from", from, "Period start, inclusive")->required()->check(DateValidator{});
    graph->add_option("--to", to, "Period end, exclusive")->required()->check(DateValidator{});
    graph->add_option("--max-entries", max_entries, "Maximal number of entries")->check(CLI::PositiveNumber);
    graph->add_option("--min-entry-weight", min_entry_weight, "Weight per entry filter")->check(CLI::Range(0.0, 1.0));
    graph->add_option("--min-edge-weight", min_edge_weight, "Normalized edge weight filter")->check(CLI::Range(0.0, 1.0));
    graph->add_option("--window-days", window_days, "Frame length; produces a dynamic graph")->check(CLI::Range(1, 100000));
    graph->add_option("--out", out_path, "Output JSON file, '-' for stdout")->required();

    // serve
    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string ui_dir;
    serve->add_option("--store", store_dir, "Store directory")->required()->check(CLI::ExistingDirectory);
    serve->add_option("--port", port, "TCP port")->required()->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--ui-dir", ui_dir, "Static UI bundle served under /")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*ingest) {
            const auto dictionary = cograph::PersonDictionary::load_file(dict_path);
            cograph::RecordStore store{std::filesystem::path(store_dir)};
            std::vector<std::filesystem::path> paths(warcs.begin(), warcs.end());
            cograph::IngestOptions options;
            options.workers = workers;
            options.split.max_sentence_tokens = max_tokens;
            const auto report = cograph::ingest(paths, dictionary, store, options);
            std::cout << report_json(report).dump(2) << '\n';
            return report.files_failed == 0 ? 0 : kRuntimeError;
        }
        if (*exporter) {
            const cograph::RecordStore store{std::filesystem::path(store_dir)};
            std::ostringstream buffer;
            store.export_ndjson(buffer);
            if (!write_text(out_path, buffer.str())) {
                std::cerr << "cannot write " << out_path << '\n';
                return kRuntimeError;
            }
            return 0;
        }
        if (*importer) {
            cograph::RecordStore store{std::filesystem::path(store_dir)};
            std::ifstream in(ndjson_path, std::ios::binary);
            const auto count = store.import_ndjson(in);
            std::cerr << "imported " << count << " records\n";
            return 0;
        }
        if (*stats) {
            if (!weights && !per_year) {
                std::cerr << "stats: one of --weights or --per-year is required\n";
                return kUsageError;
            }
            const cograph::RecordStore store{std::filesystem::path(store_dir)};
            const auto doc = weights ? cograph::to_json(store.weight_histogram()) : cograph::to_json(store.edges_per_year());
            std::cout << doc.dump(2) << '\n';
            return 0;
        }
        if (*graph) {
            cograph::GraphQuery query;
            query.persons = persons;
            query.period = {*cograph::parse_date(from), *cograph::parse_date(to)};
            query.max_entries = max_entries;
            query.min_entry_weight = min_entry_weight;
            query.min_edge_weight = min_edge_weight;
            query.window_days = window_days;
            try {
                query.validate();
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return kUsageError;
            }
            const cograph::RecordStore store{std::filesystem::path(store_dir)};
            const auto entries = store.query_entries(query.persons, query.period);
            const auto doc = window_days ? cograph::to_json(cograph::build_dynamic(entries, query))
                                         : cograph::to_json(cograph::build_static(entries, query));
            if (!write_text(out_path, doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n")) {
                std::cerr << "cannot write " << out_path << '\n';
                return kRuntimeError;
            }
            return 0;
        }
        if (*serve) {
            const cograph::RecordStore store{std::filesystem::path(store_dir)};
            cograph::ServeOptions options;
            options.host = host;
            options.port = port;
            if (!ui_dir.empty()) {
                options.ui_dir = ui_dir;
            }
            cograph::ApiServer server(store, options);
            const int bound = server.bind();
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cerr << "serving " << store.size() << " records on http://" << host << ":" << bound << '\n';
            server.listen();
            g_server = nullptr;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kUsageError;
}
