/*
   Copyright 2026 The dltbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dltbench {

// Little-endian, length-prefixed primitives shared by every binary format
// in the project (ledger files, batch payloads, anchor records).

inline void append_u16_le(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

inline void append_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

inline void append_bytes(std::string& out, std::string_view bytes) {
    append_u64_le(out, bytes.size());
    out += bytes;
}

class ByteReaderError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bounds-checked sequential reader. Every overrun throws, so a truncated
// or corrupted buffer can never yield a partial decode.
class ByteReader {
  public:
    explicit ByteReader(std::string_view data) : data_{data} {}

    std::uint16_t read_u16_le() {
        require(2);
        std::uint16_t v = static_cast<std::uint8_t>(data_[pos_]) |
                          (static_cast<std::uint16_t>(static_cast<std::uint8_t>(data_[pos_ + 1])) << 8);
        pos_ += 2;
        return v;
    }

    std::uint64_t read_u64_le() {
        require(8);
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) {
            v = (v << 8) | static_cast<std::uint8_t>(data_[pos_ + i]);
        }
        pos_ += 8;
        return v;
    }

    std::string_view read_raw(std::size_t n) {
        require(n);
        std::string_view out = data_.substr(pos_, n);
        pos_ += n;
        return out;
    }

    std::string_view read_bytes() {
        std::uint64_t n = read_u64_le();
        if (n > remaining()) {
            throw ByteReaderError("length prefix exceeds remaining bytes");
        }
        return read_raw(static_cast<std::size_t>(n));
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    std::size_t position() const { return pos_; }
    bool exhausted() const { return pos_ == data_.size(); }

  private:
    void require(std::size_t n) const {
        if (data_.size() - pos_ < n) {
            throw ByteReaderError("unexpected end of buffer");
        }
    }

    std::string_view data_;
    std::size_t pos_{0};
};

}  // namespace dltbench
