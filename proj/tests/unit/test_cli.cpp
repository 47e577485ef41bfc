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

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cograph/gzip.hpp"
#include "json.hpp"
#include "support/warc_fixtures.hpp"

using namespace cograph::testing;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(COGRAPH_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("command line workflow") {
    TempDir dir("cli");
    const auto store = (dir / "store").string();
    write_file(dir / "dict.txt", "Barack Obama\nJohn McCain\n");
    FixtureRecord r;
    r.body = "<p>Barack Obama and his rival John McCain met.</p>";
    write_file(dir / "a.warc.gz", cograph::gzip_compress(warc_record(r)));
    const auto dict = (dir / "dict.txt").string();
    const auto warc = (dir / "a.warc.gz").string();

    CHECK(run("ingest --dict " + dict + " --store " + store + " " + warc) == 0);
    CHECK(run("export --store " + store + " --out " + (dir / "out.ndjson").string()) == 0);
    CHECK(slurp(dir / "out.ndjson") ==
          R"({"a":"Barack Obama","b":"John McCain","pattern":"and his rival","n":2,"url":"http://example.com/","date":"2008-06-01T12:00:00Z"})"
          "\n");
    CHECK(run("import --store " + (dir / "copy").string() + " " + (dir / "out.ndjson").string()) == 0);
    CHECK(slurp(dir / "copy" / "records.ndjson") == slurp(dir / "out.ndjson"));
    CHECK(run("stats --store " + store + " --weights") == 0);
    CHECK(run("graph --store " + store + " --person \"Barack Obama\" --from 2008-01-01 --to 2009-01-01 --out " +
              (dir / "g.json").string()) == 0);
    const auto g = nlohmann::json::parse(slurp(dir / "g.json"));
    CHECK(g["edges"].size() == 1);
    CHECK(run("graph --store " + store + " --person \"Barack Obama\" --from 2008-01-01 --to 2009-01-01 "
              "--window-days 30 --out " + (dir / "d.json").string()) == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "d.json"))["frames"].size() == 13);
}

TEST_CASE("command line errors") {
    TempDir dir("cli-errors");
    write_file(dir / "dict.txt", "Barack Obama\n");
    write_file(dir / "empty.txt", "");
    const auto store = (dir / "store").string();
    CHECK(run("") == 1);
    CHECK(run("bogus") == 1);
    CHECK(run("--help") == 0);
    CHECK(run("stats --store " + dir.path().string()) == 1);
    CHECK(run("graph --store " + dir.path().string() + " --person X --from 2008-13-01 --to 2009-01-01 --out -") == 1);
    CHECK(run("graph --store " + dir.path().string() + " --person X --from 2009-01-01 --to 2008-01-01 --out -") == 1);
    CHECK(run("ingest --dict " + (dir / "empty.txt").string() + " --store " + store + " " +
              (dir / "dict.txt").string()) == 2);
    CHECK(run("ingest --dict " + (dir / "dict.txt").string() + " --store " + store + " " +
              (dir / "missing.warc").string()) == 2);
}
