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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cograph/extractor.hpp"
#include "cograph/graph.hpp"
#include "cograph/ingest.hpp"
#include "cograph/service.hpp"
#include "cograph/warc.hpp"
#include "httplib.h"
#include "json.hpp"
#include "support/corpus.hpp"

using namespace cograph;
using namespace cograph::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure; later checks only add to the count.
struct Checker {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    bool operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failures++ == 0) {
                first = what;
            }
        }
        return ok;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) {
            return {true, summary + ", " + std::to_string(checks) + " checks"};
        }
        return {false, std::to_string(failures) + "/" + std::to_string(checks) + " checks failed, first: " + first};
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

CoMentionRecord to_record(const OracleRecord& o) {
    CoMentionRecord r;
    r.person_a = o.a;
    r.person_b = o.b;
    r.pattern = o.pattern;
    r.n_persons = o.n;
    r.url = o.url;
    r.crawl_date = o.date;
    return r;
}

std::vector<CoMentionRecord> canonical(std::vector<CoMentionRecord> records) {
    for (auto& r : records) {
        r.record_id = 0;
    }
    std::sort(records.begin(), records.end(), content_less);
    return records;
}

void compare_graph(Checker& check, const StaticGraph& g, const OracleGraph& expected, const std::string& where) {
    check(g.nodes.size() == expected.nodes.size(), where + ": node count");
    check(g.edges.size() == expected.edges.size(), where + ": edge count");
    for (const auto& n : g.nodes) {
        if (!check(expected.nodes.contains(n.name), where + ": unexpected node " + n.name)) {
            continue;
        }
        check(close_rel(n.raw_weight, expected.nodes.at(n.name)), where + ": node raw weight " + n.name);
        check(close_rel(n.norm_weight, expected.node_norm.at(n.name)), where + ": node norm weight " + n.name);
    }
    for (const auto& e : g.edges) {
        const std::pair key{e.a, e.b};
        if (!check(expected.edges.contains(key), where + ": unexpected edge " + e.a + "|" + e.b)) {
            continue;
        }
        check(close_rel(e.raw_weight, expected.edges.at(key)), where + ": edge raw weight");
        check(close_rel(e.norm_weight, expected.edge_norm.at(key)), where + ": edge norm weight");
        check(e.entry_count == expected.edge_count.at(key), where + ": edge entry count");
    }
}

// Full pipeline (WARC bytes -> ingest -> store -> query -> graph) against the
// brute-force oracle on random corpora.
Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker check;
    std::mt19937_64 rng(1808);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    TempDir dir("oracle");
    std::size_t total_records = 0;
    std::size_t total_edges = 0;
    for (int c = 0; c < 100; ++c) {
        CorpusShape shape;
        shape.long_sentence_rate = 0.03;
        const auto corpus = random_corpus(rng, shape);
        const auto path = dir / ("corpus" + std::to_string(c) + ".warc.gz");
        write_file(path, warc_file(corpus_records(corpus), c % 2 == 0));

        const PersonDictionary dict(corpus.dictionary);
        RecordStore store;
        const std::vector<std::filesystem::path> paths = {path};
        const auto report = ingest(paths, dict, store);
        const std::string where = "corpus " + std::to_string(c);
        check(report.files_read == 1 && report.pages_emitted == corpus.pages.size(), where + ": pages");

        const auto oracle_records = oracle_corpus(corpus);
        total_records += oracle_records.size();
        std::vector<CoMentionRecord> expected_records;
        for (const auto& o : oracle_records) {
            expected_records.push_back(to_record(o));
        }
        check(canonical(store.snapshot()) == canonical(expected_records), where + ": extracted records (n, pattern)");

        for (int q = 0; q < 8; ++q) {
            OracleQuery oq;
            const auto& names = corpus.dictionary;
            const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, names.size()))(rng);
            std::vector<std::string> shuffled = names;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            oq.persons.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(k));
            if (q == 0) {
                oq.from = make_timestamp("2008-01-01");
                oq.to = make_timestamp("2010-01-01");
            } else {
                oq.from = make_timestamp("2008-01-01") + Days{std::uniform_int_distribution<int>(0, 500)(rng)};
                oq.to = oq.from + Days{std::uniform_int_distribution<int>(1, 500)(rng)};
                if (unit(rng) < 0.5) {
                    oq.max_entries = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
                }
                oq.min_entry = unit(rng) < 0.5 ? unit(rng) * 0.6 : 0.0;
                oq.min_edge = unit(rng) < 0.5 ? unit(rng) : 0.0;
            }
            GraphQuery gq;
            gq.persons = oq.persons;
            gq.period = {oq.from, oq.to};
            if (oq.max_entries != SIZE_MAX) {
                gq.max_entries = oq.max_entries;
            }
            gq.min_entry_weight = oq.min_entry;
            gq.min_edge_weight = oq.min_edge;
            const auto g = build_static(store.query_entries(gq.persons, gq.period), gq);
            total_edges += g.edges.size();
            compare_graph(check, g, oracle_graph(oracle_records, oq), where + " query " + std::to_string(q));
        }
    }
    const double elapsed = seconds_since(t0);
    check(elapsed < 30.0, "runtime " + fmt(elapsed) + " s >= 30 s");
    return check.outcome("100 corpora, " + std::to_string(total_records) + " records, " +
                         std::to_string(total_edges) + " edges compared in " + fmt(elapsed) + " s");
}

Outcome template_conformance() {
    Checker check;
    const auto dict = PersonDictionary::from_text("Barack Obama\nJohn McCain\n");
    const auto split = split_sentences("Barack Obama and his rival John McCain");
    if (!check(split.sentences.size() == 1, "one sentence")) {
        return check.outcome("");
    }
    const auto mentions = find_mentions(split.sentences[0], dict);
    const auto records = extract_records(split.sentences[0], mentions, {"http://example.com/", make_timestamp("2008-06-01")});
    if (check(records.size() == 1, "exactly one record, got " + std::to_string(records.size()))) {
        const auto& r = records[0];
        check(r.person_a == "Barack Obama", "person_a");
        check(r.person_b == "John McCain", "person_b");
        check(r.pattern == "and his rival", "pattern");
        check(r.n_persons == 2, "n");
        check(r.weight() == 0.5, "w");
    }
    return check.outcome("(Barack Obama, John McCain, \"and his rival\", n=2, w=0.5)");
}

Outcome warc_fixtures() {
    Checker check;
    std::mt19937_64 rng(5150);
    // known record counts, plain and per-record gzip
    for (int f = 0; f < 40; ++f) {
        const std::size_t responses = std::uniform_int_distribution<std::size_t>(0, 25)(rng);
        const std::size_t others = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
        std::vector<FixtureRecord> records;
        for (std::size_t i = 0; i < responses + others; ++i) {
            FixtureRecord r;
            r.type = i < responses ? "response" : (i % 2 ? "request" : "metadata");
            r.url = "http://site/" + std::to_string(i);
            r.body = std::string(std::uniform_int_distribution<std::size_t>(0, 3000)(rng), 'x');
            records.push_back(r);
        }
        std::shuffle(records.begin(), records.end(), rng);
        const bool gz = f % 2 == 1;
        std::istringstream in((gz ? gzip_compress(warcinfo_record()) : warcinfo_record()) + warc_file(records, gz));
        const auto result = parse_warc(in);
        const auto n_responses = std::count_if(result.records.begin(), result.records.end(),
                                               [](const WarcRecord& r) { return r.record_type == RecordType::response; });
        const std::string where = "fixture " + std::to_string(f);
        check(result.records.size() == responses + others + 1, where + ": record count");
        check(static_cast<std::size_t>(n_responses) == responses, where + ": response count");
        check(result.skipped.empty() && result.outcome == StreamOutcome::end_of_stream, where + ": clean end");
    }
    // truncated record in the middle or at the end
    for (int f = 0; f < 40; ++f) {
        const std::size_t count = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
        const std::size_t broken = std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
        std::string bytes;
        std::vector<std::string> valid_urls;
        for (std::size_t i = 0; i < count; ++i) {
            FixtureRecord r;
            r.url = "http://site/" + std::to_string(i);
            r.body = "<p>" + std::string(std::uniform_int_distribution<std::size_t>(10, 2000)(rng), 'y') + "</p>";
            std::string one = warc_record(r);
            if (i == broken) {
                one.resize(std::uniform_int_distribution<std::size_t>(1, one.size() - 5)(rng));
            } else {
                valid_urls.push_back(r.url);
            }
            bytes += f % 2 ? gzip_compress(one) : one;
        }
        std::istringstream in(bytes);
        const auto result = parse_warc(in);
        std::vector<std::string> urls;
        for (const auto& r : result.records) {
            urls.push_back(r.target_url);
        }
        check(urls == valid_urls, "truncated fixture " + std::to_string(f) + ": valid records recovered");
    }
    // 10 MB ingest, one worker
    TempDir dir("big");
    const auto path = dir / "big.warc";
    std::size_t expected_pages = 0;
    {
        std::string bytes;
        std::size_t i = 0;
        while (bytes.size() < 10u * 1024 * 1024) {
            FixtureRecord r;
            r.url = "http://big/" + std::to_string(i++);
            std::string body = "<html><body>";
            for (int s = 0; s < 40; ++s) {
                body += "<p>Barack Obama and his rival John McCain met again in city number " + std::to_string(s) +
                        ". Hillary Clinton, Barack Obama.</p>";
            }
            r.body = body + "</body></html>";
            bytes += warc_record(r);
            ++expected_pages;
        }
        write_file(path, bytes);
    }
    const auto dict = PersonDictionary::from_text("Barack Obama\nJohn McCain\nHillary Clinton\n");
    RecordStore store;
    const std::vector<std::filesystem::path> paths = {path};
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = ingest(paths, dict, store);
    const double elapsed = seconds_since(t0);
    check(report.pages_emitted == expected_pages, "10 MB fixture: page count");
    check(report.comentions == expected_pages * 80, "10 MB fixture: co-mention count");
    check(elapsed < 10.0, "10 MB ingest took " + fmt(elapsed) + " s");
    return check.outcome("80 fixtures exact, 10 MB ingest " + fmt(elapsed) + " s");
}

Outcome dynamic_partition() {
    Checker check;
    const Period t{make_timestamp("2008-05-01"), make_timestamp("2009-05-01")};
    const auto frames = partition_period(t, 30);
    check(frames.size() == 13, "13 frames, got " + std::to_string(frames.size()));
    for (std::size_t i = 0; i < frames.size(); ++i) {
        check(frames[i].to - frames[i].from == (i + 1 < frames.size() ? Days{30} : Days{5}), "frame length");
        check(i == 0 ? frames[i].from == t.from : frames[i].from == frames[i - 1].to, "frames contiguous and disjoint");
    }
    check(!frames.empty() && frames.back().to == t.to, "frames cover T");

    std::mt19937_64 rng(2008);
    RecordStore store;
    std::vector<CoMentionRecord> batch;
    const std::vector<std::string> people = {"Barack Obama", "John McCain", "Hillary Clinton", "Sarah Palin", "Joe Biden"};
    for (int i = 0; i < 5000; ++i) {
        const auto x = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        auto y = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        while (y == x) {
            y = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        }
        CoMentionRecord r;
        r.person_a = std::min(people[x], people[y]);
        r.person_b = std::max(people[x], people[y]);
        r.n_persons = std::uniform_int_distribution<int>(2, 6)(rng);
        r.url = "http://u/" + std::to_string(i);
        r.crawl_date = make_timestamp("2008-03-01") + std::chrono::seconds{std::uniform_int_distribution<int>(0, 500 * 86400)(rng)};
        batch.push_back(r);
    }
    store.append(batch);
    const std::vector<std::string> persons = {"Barack Obama", "Sarah Palin"};
    const auto all = store.query_entries(persons, t);
    std::vector<CoMentionRecord> united;
    for (const auto& f : frames) {
        const auto part = store.query_entries(persons, f);
        united.insert(united.end(), part.begin(), part.end());
    }
    check(!all.empty() && canonical(united) == canonical(all), "union of frame entries equals static entries");

    GraphQuery q;
    q.persons = persons;
    q.period = t;
    q.window_days = 30;
    const auto dynamic = build_dynamic(all, q);
    std::size_t used = 0;
    for (const auto& f : dynamic.frames) {
        used += f.entries_used;
    }
    check(dynamic.frames.size() == 13, "dynamic graph frame count");
    check(used == build_static(all, q).entries_used && used == all.size(), "frame entries_used sum to static entries");
    return check.outcome("13 frames (12 x 30 d + 5 d), " + std::to_string(all.size()) + " entries partitioned");
}

Outcome filter_monotonicity() {
    Checker check;
    std::mt19937_64 rng(1000);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int pair = 0; pair < 1000; ++pair) {
        const std::size_t n_people = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
        const std::size_t n_entries = std::uniform_int_distribution<std::size_t>(1, 120)(rng);
        std::vector<CoMentionRecord> entries;
        for (std::size_t i = 0; i < n_entries; ++i) {
            const auto x = std::uniform_int_distribution<std::size_t>(0, n_people - 1)(rng);
            auto y = std::uniform_int_distribution<std::size_t>(0, n_people - 1)(rng);
            while (y == x) {
                y = std::uniform_int_distribution<std::size_t>(0, n_people - 1)(rng);
            }
            CoMentionRecord r;
            r.person_a = "P" + std::to_string(std::min(x, y));
            r.person_b = "P" + std::to_string(std::max(x, y));
            r.n_persons = std::uniform_int_distribution<int>(2, 7)(rng);
            r.crawl_date = make_timestamp("2008-05-01") + std::chrono::seconds{std::uniform_int_distribution<int>(0, 120 * 86400)(rng)};
            r.record_id = i + 1;
            entries.push_back(r);
        }
        GraphQuery base;
        base.persons = {"P0"};
        if (unit(rng) < 0.5) {
            base.persons.push_back("P1");
        }
        base.period = {make_timestamp("2008-05-01"), make_timestamp("2008-09-01")};
        if (unit(rng) < 0.3) {
            base.max_entries = std::uniform_int_distribution<std::size_t>(1, 100)(rng);
        }
        base.min_entry_weight = unit(rng) < 0.5 ? unit(rng) * 0.5 : 0.0;
        base.min_edge_weight = unit(rng) < 0.5 ? unit(rng) : 0.0;
        std::vector<CoMentionRecord> selected;
        for (const auto& e : entries) {
            if (std::any_of(base.persons.begin(), base.persons.end(), [&](const auto& p) { return e.involves(p); })) {
                selected.push_back(e);
            }
        }

        GraphQuery raised = base;
        const int which = pair % 3;
        if (which != 1) {
            raised.min_entry_weight = std::min(1.0, base.min_entry_weight + unit(rng) * 0.5);
        }
        if (which != 0) {
            raised.min_edge_weight = std::min(1.0, base.min_edge_weight + unit(rng) * 0.5);
        }
        const std::string where = "pair " + std::to_string(pair);
        auto monotone = [&](const StaticGraph& lo, const StaticGraph& hi, const std::string& label) {
            check(hi.nodes.size() <= lo.nodes.size(), where + label + ": node count increased");
            check(hi.edges.size() <= lo.edges.size(), where + label + ": edge count increased");
            for (const auto& e : hi.edges) {
                const auto* before = lo.find_edge(e.a, e.b);
                check(before != nullptr && e.raw_weight <= before->raw_weight, where + label + ": edge added or grew");
            }
            for (const auto& n : hi.nodes) {
                const auto* before = lo.find_node(n.name);
                check(before != nullptr && n.raw_weight <= before->raw_weight, where + label + ": node added or grew");
            }
        };
        monotone(build_static(selected, base), build_static(selected, raised), "");
        base.window_days = raised.window_days = std::uniform_int_distribution<int>(7, 60)(rng);
        const auto d_lo = build_dynamic(selected, base);
        const auto d_hi = build_dynamic(selected, raised);
        for (std::size_t f = 0; f < d_lo.frames.size(); ++f) {
            monotone(d_lo.frames[f], d_hi.frames[f], " frame " + std::to_string(f));
        }
    }
    return check.outcome("1000 (graph, threshold) pairs, static and dynamic");
}

// 2008 campaign storyline: Clinton next to Obama in May and June 2008, Palin next to
// McCain from September 2008, plus noise that the two filters must remove.
Outcome scenario() {
    Checker check;
    TempDir dir("scenario");
    const auto dict = PersonDictionary::from_text(
        "Barack Obama\nJohn McCain\nHillary Clinton\nSarah Palin\nJoe Lieberman\nJoe Biden\nNancy Pelosi\n"
        "Harry Reid\nBill Clinton\nJoe Wurzelbacher\nTom Brokaw\nBob Schieffer\nGwen Ifill\n");
    const Period t{make_timestamp("2008-05-01"), make_timestamp("2009-05-01")};
    const auto frames = partition_period(t, 30);

    std::vector<FixtureRecord> pages;
    auto add_page = [&](Timestamp date, const std::vector<std::string>& sentences) {
        FixtureRecord r;
        r.url = "http://news.example/" + std::to_string(pages.size());
        r.date = format_timestamp(date);
        r.body = "<html><body>";
        for (const auto& s : sentences) {
            r.body += "<p>" + s + "</p>";
        }
        r.body += "</body></html>";
        pages.push_back(std::move(r));
    };
    const Timestamp palin_from = make_timestamp("2008-09-01");
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const Timestamp day = frames[f].from + std::chrono::hours{12};
        std::vector<std::string> sentences;
        for (int i = 0; i < 20; ++i) {
            sentences.push_back("Barack Obama and his rival John McCain debated again.");
        }
        // five names, weight 0.2 each, edges far below 0.025 of the strongest edge
        sentences.push_back("Joe Wurzelbacher asked Barack Obama about taxes, not Tom Brokaw, Bob Schieffer or Gwen Ifill.");
        if (f < 2) {
            for (int i = 0; i < 5; ++i) {
                sentences.push_back("Hillary Clinton campaigned against Barack Obama in the primaries.");
            }
        } else {
            // six names, weight 1/6 below the 0.2 entry filter
            for (int i = 0; i < 2; ++i) {
                sentences.push_back("Hillary Clinton, Barack Obama, Joe Biden, Nancy Pelosi, Harry Reid and Bill Clinton spoke.");
            }
        }
        add_page(day, sentences);
        if (frames[f].to > palin_from) {
            std::vector<std::string> palin;
            for (int i = 0; i < 3; ++i) {
                palin.push_back("Sarah Palin, John McCain and Joe Lieberman appeared together.");
            }
            add_page(std::max(day, palin_from + std::chrono::hours{12}), palin);
        }
    }
    const auto path = dir / "scenario.warc.gz";
    write_file(path, warc_file(pages, true));
    TempDir store_dir("scenario-store");
    RecordStore store(store_dir.path());
    const std::vector<std::filesystem::path> paths = {path};
    const auto report = ingest(paths, dict, store);
    check(report.files_failed == 0 && report.pages_emitted == pages.size(), "scenario ingest");

    GraphQuery q;
    q.persons = {"Barack Obama", "John McCain"};
    q.period = t;
    q.window_days = 30;
    q.min_entry_weight = 0.2;
    q.min_edge_weight = 0.025;
    const auto entries = store.query_entries(q.persons, q.period);
    const auto dynamic = build_dynamic(entries, q);
    if (!check(dynamic.frames.size() == 13, "13 frames")) {
        return check.outcome("");
    }
    std::string clinton_frames;
    std::string palin_frames;
    for (std::size_t f = 0; f < dynamic.frames.size(); ++f) {
        const auto& g = dynamic.frames[f];
        const std::string where = "frame " + std::to_string(f) + " (" + format_timestamp(g.period.from).substr(0, 10) + ")";
        const bool clinton_expected = f < 2;
        const bool palin_expected = g.period.to > palin_from;
        const bool clinton = g.find_node("Hillary Clinton") != nullptr && g.find_edge("Hillary Clinton", "Barack Obama") != nullptr;
        const bool palin = g.find_node("Sarah Palin") != nullptr && g.find_edge("Sarah Palin", "John McCain") != nullptr;
        check(clinton == clinton_expected, where + ": Clinton-Obama presence");
        check((g.find_node("Hillary Clinton") != nullptr) == clinton_expected, where + ": Clinton node presence");
        check(palin == palin_expected, where + ": Palin-McCain presence");
        check((g.find_node("Sarah Palin") != nullptr) == palin_expected, where + ": Palin node presence");
        check(g.find_edge("Barack Obama", "John McCain") != nullptr, where + ": Obama-McCain edge");
        check(g.find_node("Joe Wurzelbacher") == nullptr, where + ": weak edge filtered");
        clinton_frames += clinton ? '1' : '0';
        palin_frames += palin ? '1' : '0';
    }
    check(dynamic.frames[4].period.from <= palin_from && palin_from < dynamic.frames[4].period.to,
          "September 2008 starts in frame 4");

    // the filters are what remove the later Clinton mentions and the weak edges
    GraphQuery unfiltered = q;
    unfiltered.min_entry_weight = 0.0;
    unfiltered.min_edge_weight = 0.0;
    const auto raw = build_dynamic(entries, unfiltered);
    check(raw.frames[5].find_node("Hillary Clinton") != nullptr, "Clinton present without entry filter");
    check(raw.frames[5].find_node("Joe Wurzelbacher") != nullptr, "weak edge present without edge filter");
    return check.outcome("Clinton frames " + clinton_frames + ", Palin frames " + palin_frames);
}

Outcome store_oracle() {
    Checker check;
    std::mt19937_64 rng(10000);
    std::vector<std::string> people;
    for (int i = 0; i < 40; ++i) {
        people.push_back("Person " + std::to_string(i));
    }
    RecordStore store;
    std::vector<CoMentionRecord> all;
    for (int i = 0; i < 10000; ++i) {
        const auto x = std::uniform_int_distribution<std::size_t>(0, people.size() - 1)(rng);
        auto y = std::uniform_int_distribution<std::size_t>(0, people.size() - 1)(rng);
        while (y == x) {
            y = std::uniform_int_distribution<std::size_t>(0, people.size() - 1)(rng);
        }
        CoMentionRecord r;
        r.person_a = std::min(people[x], people[y]);
        r.person_b = std::max(people[x], people[y]);
        r.pattern = i % 3 ? "and" : "";
        r.n_persons = std::uniform_int_distribution<int>(2, 6)(rng);
        r.url = "http://u/" + std::to_string(i % 997) + "?q=\"x\"";
        r.crawl_date = make_timestamp("2008-01-01") + Days{std::uniform_int_distribution<int>(0, 700)(rng)};
        all.push_back(r);
    }
    for (std::size_t off = 0; off < all.size(); off += 1000) {
        store.append(std::span(all).subspan(off, 1000));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i].record_id = i + 1;
    }
    for (int q = 0; q < 200; ++q) {
        std::vector<std::string> persons;
        const auto k = std::uniform_int_distribution<std::size_t>(1, q % 10 == 0 ? 30 : 3)(rng);
        for (std::size_t i = 0; i < k; ++i) {
            persons.push_back(q % 17 == 0 && i == 0 ? "Nobody" : people[std::uniform_int_distribution<std::size_t>(0, people.size() - 1)(rng)]);
        }
        const int d0 = std::uniform_int_distribution<int>(-30, 720)(rng);
        const int d1 = std::uniform_int_distribution<int>(-30, 720)(rng);
        const Period p{make_timestamp("2008-01-01") + Days{std::min(d0, d1)},
                       make_timestamp("2008-01-01") + Days{std::max(d0, d1) + 1}};
        std::optional<std::size_t> limit;
        if (q % 4 == 0) {
            limit = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
        }
        std::vector<CoMentionRecord> expected;
        for (const auto& r : all) {
            const bool hit = std::any_of(persons.begin(), persons.end(), [&](const auto& s) { return r.involves(s); });
            if (hit && p.from <= r.crawl_date && r.crawl_date < p.to) {
                expected.push_back(r);
            }
        }
        std::stable_sort(expected.begin(), expected.end(),
                         [](const auto& a, const auto& b) { return a.crawl_date < b.crawl_date; });
        if (limit && expected.size() > *limit) {
            expected.resize(*limit);
        }
        check(store.query_entries(persons, p, limit) == expected, "query " + std::to_string(q));
    }

    std::ostringstream out;
    store.export_ndjson(out);
    RecordStore copy;
    std::istringstream in(out.str());
    check(copy.import_ndjson(in) == all.size(), "import count");
    check(canonical(copy.snapshot()) == canonical(store.snapshot()), "round-trip multiset equality");
    std::ostringstream again;
    copy.export_ndjson(again);
    auto lines = [](const std::string& text) {
        std::vector<std::string> v;
        std::istringstream s(text);
        for (std::string line; std::getline(s, line);) {
            v.push_back(line);
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    check(lines(out.str()) == lines(again.str()), "re-exported NDJSON lines");
    return check.outcome("200 queries on 10^4 records, NDJSON round trip");
}

Outcome api_determinism() {
    Checker check;
    TempDir dir("api");
    std::mt19937_64 rng(77);
    const auto corpus = random_corpus(rng);
    {
        RecordStore writer(dir.path());
        std::vector<CoMentionRecord> records;
        for (const auto& o : oracle_corpus(corpus)) {
            records.push_back(to_record(o));
        }
        writer.append(records);
    }
    const RecordStore store(dir.path());
    const RecordStore reopened(dir.path());

    nlohmann::json body = {{"persons", corpus.dictionary}, {"from", "2008-01-01"}, {"to", "2010-01-01"},
                           {"min_entry_weight", 0.1}, {"min_edge_weight", 0.05}, {"window_days", 30}, {"step_days", 7}};
    std::vector<ApiRequest> requests = {
        {"GET", "/api/persons", {{"q", corpus.dictionary[0].substr(0, 2)}, {"limit", "5"}}, ""},
        {"GET", "/api/persons", {}, ""},
        {"POST", "/api/graph/static", {}, body.dump()},
        {"POST", "/api/graph/dynamic", {}, body.dump()},
        {"POST", "/api/stats/temporal", {}, body.dump()},
        {"POST", "/api/graph/static", {}, R"({"persons":[]})"},
    };
    ServeOptions options;
    options.port = 0;
    ApiServer server(store, options);
    const int port = server.bind();
    std::jthread loop([&] { server.listen(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);

    for (std::size_t i = 0; i < requests.size(); ++i) {
        const auto& req = requests[i];
        const auto first = handle_request(store, req);
        const std::string where = "request " + std::to_string(i);
        for (int k = 0; k < 20; ++k) {
            check(handle_request(store, req).body == first.body, where + ": repeated body differs");
        }
        check(handle_request(reopened, req).body == first.body, where + ": reopened store body differs");
        httplib::Params params(req.params.begin(), req.params.end());
        for (int k = 0; k < 3; ++k) {
            auto res = req.method == "GET" ? client.Get(req.path, params, httplib::Headers{})
                                           : client.Post(req.path, req.body, "application/json");
            check(res && res->body == first.body && res->status == first.status, where + ": HTTP body differs");
        }
    }
    server.stop();
    return check.outcome(std::to_string(requests.size()) + " requests, in-process and over HTTP");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle-equivalence", oracle_equivalence}, {"template-conformance", template_conformance},
        {"warc-fixtures", warc_fixtures},           {"dynamic-partition", dynamic_partition},
        {"filter-monotonicity", filter_monotonicity}, {"scenario-fixture", scenario},
        {"store-oracle", store_oracle},             {"api-determinism", api_determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
