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
#include <string>
#include <string_view>

namespace dltbench::gas {

// Ethereum-style cost constants. Calldata prices are the post-Istanbul
// 16/4 split; storage and log prices follow the yellow paper. The contract
// call overhead is a calibration constant covering everything a contract
// spends beyond calldata, storage slots and logs (dispatch, memory,
// bookkeeping reads); it is fitted, not derived.
struct GasSchedule {
    std::uint64_t tx_base{21'000};
    std::uint64_t calldata_nonzero_byte{16};
    std::uint64_t calldata_zero_byte{4};
    std::uint64_t sstore_new_slot{20'000};
    std::uint64_t sstore_update_slot{5'000};
    std::uint64_t log_base{375};
    std::uint64_t log_topic{375};
    std::uint64_t log_data_byte{8};
    std::uint64_t contract_overhead{93'850};

    friend bool operator==(const GasSchedule&, const GasSchedule&) = default;
};

// Cost of a plain value transaction carrying `payload` as calldata:
// tx_base plus the per-byte calldata prices.
std::uint64_t direct_tx_gas(const GasSchedule& schedule, std::string_view payload);

// Cost of a contract call: the calldata cost of `payload`, the contract
// overhead, storage-slot writes, and `event_count` logs carrying
// `event_topics` topics and `event_data_bytes` bytes in total.
std::uint64_t contract_store_gas(const GasSchedule& schedule, std::string_view payload,
                                 std::uint64_t new_slots, std::uint64_t updated_slots,
                                 std::uint64_t event_count, std::uint64_t event_topics,
                                 std::uint64_t event_data_bytes);

// Cost of anchoring one batch digest on the public ledger: calldata is the
// 32-byte digest (priced as nonzero bytes, so the figure never depends on
// the digest's value) plus the metadata string; one storage slot holds the
// digest; one single-topic event carries digest and metadata. Batch size
// does not appear anywhere, so anchors of 10 and 10,000 triples cost the
// same gas.
std::uint64_t anchor_tx_gas(const GasSchedule& schedule, std::string_view metadata);

// Storage slots consumed by a string written to contract state:
// one 32-byte slot per chunk plus a length slot.
std::uint64_t string_storage_slots(std::size_t byte_length);

// Bytes of an ABI-encoded dynamic byte string: offset word, length word,
// payload padded to a 32-byte boundary.
std::uint64_t abi_encoded_size(std::size_t byte_length);

}  // namespace dltbench::gas
