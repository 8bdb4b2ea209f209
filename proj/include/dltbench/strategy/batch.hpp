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

#include <span>
#include <string>
#include <vector>

#include <dltbench/ledger/sha256.hpp>
#include <dltbench/strategy/triple_op.hpp>

namespace dltbench::strategy {

// A group of operations stored as one private-ledger transaction. The hash
// is computed over the payload bytes exactly as they sit on the ledger, so
// an auditor can verify against the stored transaction directly.
struct Batch {
    std::vector<TripleOp> ops;
    std::string payload;
    std::uint64_t serialized_bytes{0};
    Sha256Digest batch_hash{};
};

// Batch payload: a sequence of length-prefixed direct-op encodings
// (little-endian u64 lengths).
std::string encode_batch_payload(std::span<const TripleOp> ops);
std::vector<TripleOp> decode_batch_payload(std::string_view payload);

// Order-preserving partition of `ops` into maximal batches of at most
// `batch_size` operations and at most `max_bytes` payload bytes. Throws
// when a single framed op already exceeds `max_bytes`.
std::vector<Batch> batch_triples(std::span<const TripleOp> ops, std::uint64_t batch_size,
                                 std::uint64_t max_bytes);

}  // namespace dltbench::strategy
