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

#include <dltbench/strategy/anchor.hpp>

#include <algorithm>
#include <stdexcept>

#include <dltbench/ledger/bytes.hpp>

namespace dltbench::strategy {

namespace {

constexpr std::string_view kTxKey = "private-tx:";

}  // namespace

std::string encode_anchor_record(const AnchorRecord& record) {
    std::string out;
    out.append(reinterpret_cast<const char*>(record.hash.data()), record.hash.size());
    append_bytes(out, record.submitter);
    append_u64_le(out, record.logical_timestamp);
    append_bytes(out, record.metadata);
    return out;
}

AnchorRecord decode_anchor_record(std::string_view payload) {
    try {
        ByteReader reader{payload};
        AnchorRecord record;
        std::string_view hash = reader.read_raw(32);
        std::copy(hash.begin(), hash.end(), reinterpret_cast<char*>(record.hash.data()));
        record.submitter = std::string{reader.read_bytes()};
        record.logical_timestamp = reader.read_u64_le();
        record.metadata = std::string{reader.read_bytes()};
        if (!reader.exhausted()) {
            throw MalformedPayloadError("trailing bytes after anchor record");
        }
        return record;
    } catch (const ByteReaderError& e) {
        throw MalformedPayloadError(std::string{"bad anchor record: "} + e.what());
    }
}

std::string make_anchor_metadata(std::uint64_t private_tx_index, const Batch& batch) {
    std::string metadata{kTxKey};
    metadata += std::to_string(private_tx_index);
    metadata += ";ops:" + std::to_string(batch.ops.size());
    metadata += ";bytes:" + std::to_string(batch.serialized_bytes);
    metadata += ";sha256:" + hex(batch.batch_hash);
    return metadata;
}

std::optional<std::uint64_t> resolve_anchor_metadata(std::string_view metadata) {
    std::size_t at = metadata.find(kTxKey);
    if (at == std::string_view::npos) {
        return std::nullopt;
    }
    std::string_view rest = metadata.substr(at + kTxKey.size());
    if (rest.empty() || rest.front() < '0' || rest.front() > '9') {
        return std::nullopt;
    }
    std::uint64_t index = 0;
    for (char c : rest) {
        if (c < '0' || c > '9') {
            break;
        }
        index = index * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return index;
}

AnchorRecord anchor_batch(const Batch& batch, ledger::Ledger& public_ledger,
                          const gas::GasSchedule& schedule, std::string_view submitter,
                          std::string metadata) {
    if (batch.ops.empty()) {
        throw std::invalid_argument("cannot anchor an empty batch");
    }
    if (metadata.empty()) {
        throw std::invalid_argument("anchor metadata must be non-empty");
    }
    AnchorRecord record;
    record.hash = batch.batch_hash;
    record.submitter = std::string{submitter};
    record.logical_timestamp = public_ledger.transaction_count();
    record.metadata = std::move(metadata);

    std::uint64_t gas = gas::anchor_tx_gas(schedule, record.metadata);
    public_ledger.append_transaction(encode_anchor_record(record), submitter, gas);
    return record;
}

}  // namespace dltbench::strategy
