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

#include <dltbench/strategy/batch.hpp>

#include <stdexcept>

#include <dltbench/ledger/bytes.hpp>

namespace dltbench::strategy {

std::string encode_batch_payload(std::span<const TripleOp> ops) {
    std::string payload;
    for (const TripleOp& op : ops) {
        append_bytes(payload, encode_direct_op(op));
    }
    return payload;
}

std::vector<TripleOp> decode_batch_payload(std::string_view payload) {
    std::vector<TripleOp> ops;
    ByteReader reader{payload};
    try {
        while (!reader.exhausted()) {
            ops.push_back(decode_direct_op(reader.read_bytes()));
        }
    } catch (const ByteReaderError& e) {
        throw MalformedPayloadError(std::string{"bad batch framing: "} + e.what());
    }
    return ops;
}

std::vector<Batch> batch_triples(std::span<const TripleOp> ops, std::uint64_t batch_size,
                                 std::uint64_t max_bytes) {
    if (batch_size == 0) {
        throw std::invalid_argument("batch_size must be positive");
    }

    std::vector<Batch> batches;
    Batch current;
    auto close_current = [&] {
        if (!current.ops.empty()) {
            current.serialized_bytes = current.payload.size();
            current.batch_hash = sha256(current.payload);
            batches.push_back(std::move(current));
            current = Batch{};
        }
    };

    for (const TripleOp& op : ops) {
        std::string encoded = encode_direct_op(op);
        std::uint64_t framed_size = 8 + encoded.size();
        if (framed_size > max_bytes) {
            throw std::invalid_argument("single operation of " + std::to_string(framed_size) +
                                        " framed bytes exceeds the " + std::to_string(max_bytes) +
                                        "-byte batch limit");
        }
        if (current.ops.size() >= batch_size || current.payload.size() + framed_size > max_bytes) {
            close_current();
        }
        append_bytes(current.payload, encoded);
        current.ops.push_back(op);
    }
    close_current();
    return batches;
}

}  // namespace dltbench::strategy
