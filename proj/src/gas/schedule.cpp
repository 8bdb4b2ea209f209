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

#include <dltbench/gas/schedule.hpp>

#include <algorithm>

namespace dltbench::gas {

std::uint64_t direct_tx_gas(const GasSchedule& schedule, std::string_view payload) {
    std::uint64_t zero_bytes =
        static_cast<std::uint64_t>(std::count(payload.begin(), payload.end(), '\0'));
    std::uint64_t nonzero_bytes = payload.size() - zero_bytes;
    return schedule.tx_base + schedule.calldata_nonzero_byte * nonzero_bytes +
           schedule.calldata_zero_byte * zero_bytes;
}

std::uint64_t contract_store_gas(const GasSchedule& schedule, std::string_view payload,
                                 std::uint64_t new_slots, std::uint64_t updated_slots,
                                 std::uint64_t event_count, std::uint64_t event_topics,
                                 std::uint64_t event_data_bytes) {
    return direct_tx_gas(schedule, payload) + schedule.contract_overhead +
           schedule.sstore_new_slot * new_slots + schedule.sstore_update_slot * updated_slots +
           schedule.log_base * event_count + schedule.log_topic * event_topics +
           schedule.log_data_byte * event_data_bytes;
}

std::uint64_t anchor_tx_gas(const GasSchedule& schedule, std::string_view metadata) {
    // Stand-in calldata: the digest bytes are priced as 32 nonzero bytes.
    std::string calldata(32, '\x01');
    calldata += metadata;
    return contract_store_gas(schedule, calldata,
                              /*new_slots=*/1, /*updated_slots=*/0,
                              /*event_count=*/1, /*event_topics=*/1,
                              /*event_data_bytes=*/32 + metadata.size());
}

std::uint64_t string_storage_slots(std::size_t byte_length) {
    return (byte_length + 31) / 32 + 1;
}

std::uint64_t abi_encoded_size(std::size_t byte_length) {
    return 64 + ((byte_length + 31) / 32) * 32;
}

}  // namespace dltbench::gas
