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

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cograph {

class GzipError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] inline bool has_gzip_magic(std::string_view bytes) noexcept {
    return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
           static_cast<unsigned char>(bytes[1]) == 0x8b;
}

/// Incremental gzip/zlib decoder that transparently continues across
/// concatenated gzip members (the per-record WARC.gz layout).
class Inflater {
public:
    Inflater();
    ~Inflater();
    Inflater(const Inflater&) = delete;
    Inflater& operator=(const Inflater&) = delete;

    /// Decodes `input` and appends the result to `out`. Throws GzipError on
    /// corrupt data.
    void feed(std::string_view input, std::string& out);

    /// True when the last member seen so far was completely decoded.
    [[nodiscard]] bool at_member_boundary() const noexcept;

private:
    struct State;
    std::unique_ptr<State> state_;
};

/// Whole-buffer helpers.
[[nodiscard]] std::string gunzip(std::string_view compressed);
/// Raw or zlib-wrapped deflate (HTTP `Content-Encoding: deflate` is used both ways).
[[nodiscard]] std::string inflate_deflate(std::string_view compressed);
[[nodiscard]] std::string gzip_compress(std::string_view data);

}  // namespace cograph
