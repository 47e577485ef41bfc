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

#include "cograph/gzip.hpp"

#include <zlib.h>

#include <array>
#include <cstring>

namespace cograph {

namespace {

constexpr int kAutoDetectWindow = 15 + 32;  // gzip or zlib header
constexpr int kRawWindow = -15;
constexpr int kGzipWindow = 15 + 16;

std::string inflate_with(std::string_view compressed, int window_bits) {
    z_stream zs{};
    if (inflateInit2(&zs, window_bits) != Z_OK) {
        throw GzipError("inflateInit2 failed");
    }
    std::string out;
    std::array<char, 1 << 16> chunk{};
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
    zs.avail_in = static_cast<uInt>(compressed.size());
    int rc = Z_OK;
    while (rc != Z_STREAM_END) {
        zs.next_out = reinterpret_cast<Bytef*>(chunk.data());
        zs.avail_out = static_cast<uInt>(chunk.size());
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw GzipError("corrupt deflate data");
        }
        out.append(chunk.data(), chunk.size() - zs.avail_out);
        if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
            inflateEnd(&zs);
            throw GzipError("truncated deflate data");
        }
        if (rc == Z_STREAM_END && zs.avail_in > 0 && window_bits == kAutoDetectWindow) {
            // another gzip member follows
            if (inflateReset(&zs) != Z_OK) {
                inflateEnd(&zs);
                throw GzipError("inflateReset failed");
            }
            rc = Z_OK;
        }
    }
    inflateEnd(&zs);
    return out;
}

}  // namespace

struct Inflater::State {
    z_stream zs{};
    bool member_done = true;
    bool initialized = false;
};

Inflater::Inflater() : state_(std::make_unique<State>()) {
    if (inflateInit2(&state_->zs, kAutoDetectWindow) != Z_OK) {
        throw GzipError("inflateInit2 failed");
    }
    state_->initialized = true;
}

Inflater::~Inflater() {
    if (state_ && state_->initialized) {
        inflateEnd(&state_->zs);
    }
}

void Inflater::feed(std::string_view input, std::string& out) {
    auto& zs = state_->zs;
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(input.data()));
    zs.avail_in = static_cast<uInt>(input.size());
    std::array<char, 1 << 16> chunk{};
    while (zs.avail_in > 0) {
        if (state_->member_done) {
            // gzip members may be separated by zero padding
            if (*zs.next_in == 0) {
                ++zs.next_in;
                --zs.avail_in;
                continue;
            }
            if (inflateReset(&zs) != Z_OK) {
                throw GzipError("inflateReset failed");
            }
            state_->member_done = false;
        }
        zs.next_out = reinterpret_cast<Bytef*>(chunk.data());
        zs.avail_out = static_cast<uInt>(chunk.size());
        const int rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
            throw GzipError(zs.msg != nullptr ? zs.msg : "corrupt gzip data");
        }
        out.append(chunk.data(), chunk.size() - zs.avail_out);
        if (rc == Z_STREAM_END) {
            state_->member_done = true;
        }
    }
    // drain any output still buffered inside zlib
    for (;;) {
        if (state_->member_done) {
            break;
        }
        zs.next_out = reinterpret_cast<Bytef*>(chunk.data());
        zs.avail_out = static_cast<uInt>(chunk.size());
        const int rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
            throw GzipError(zs.msg != nullptr ? zs.msg : "corrupt gzip data");
        }
        const std::size_t produced = chunk.size() - zs.avail_out;
        out.append(chunk.data(), produced);
        if (rc == Z_STREAM_END) {
            state_->member_done = true;
        }
        if (produced == 0) {
            break;
        }
    }
}

bool Inflater::at_member_boundary() const noexcept { return state_->member_done; }

std::string gunzip(std::string_view compressed) { return inflate_with(compressed, kAutoDetectWindow); }

std::string inflate_deflate(std::string_view compressed) {
    if (compressed.size() >= 2) {
        const auto cmf = static_cast<unsigned char>(compressed[0]);
        const auto flg = static_cast<unsigned char>(compressed[1]);
        if ((cmf & 0x0f) == 8 && ((cmf << 8) | flg) % 31 == 0) {
            return inflate_with(compressed, 15);
        }
    }
    return inflate_with(compressed, kRawWindow);
}

std::string gzip_compress(std::string_view data) {
    z_stream zs{};
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, kGzipWindow, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
        throw GzipError("deflateInit2 failed");
    }
    std::string out;
    out.resize(deflateBound(&zs, static_cast<uLong>(data.size())) + 32);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) {
        throw GzipError("deflate failed");
    }
    out.resize(zs.total_out);
    return out;
}

}  // namespace cograph
