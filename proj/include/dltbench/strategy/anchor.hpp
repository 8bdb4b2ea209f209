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
#include <optional>
#include <string>
#include <string_view>

#include <dltbench/gas/schedule.hpp>
#include <dltbench/ledger/ledger.hpp>
#include <dltbench/strategy/batch.hpp>

namespace dltbench::strategy {

// Public-ledger record certifying one private batch: the batch digest, who
// anchored it, when (logical time), and a metadata string that names the
// private transaction holding the batch.
struct AnchorRecord {
    Sha256Digest hash{};
    std::string submitter;
    std::uint64_t logical_timestamp{0};
    std::string metadata;

    friend bool operator==(const AnchorRecord&, const AnchorRecord&) = default;
};

// Binary payload: hash || len-prefixed submitter || timestamp ||
// len-prefixed metadata (little-endian u64 lengths).
std::string encode_anchor_record(const AnchorRecord& record);
AnchorRecord decode_anchor_record(std::string_view payload);

// Default metadata: names the private transaction and describes the batch.
std::string make_anchor_metadata(std::uint64_t private_tx_index, const Batch& batch);

// Extracts the private transaction index from an anchor metadata string;
// empty when the metadata does not name one.
std::optional<std::uint64_t> resolve_anchor_metadata(std::string_view metadata);

// Appends one anchor transaction for `batch` to the public ledger, charged
// at anchor_tx_gas. The batch must be non-empty.
AnchorRecord anchor_batch(const Batch& batch, ledger::Ledger& public_ledger,
                          const gas::GasSchedule& schedule, std::string_view submitter,
                          std::string metadata);

}  // namespace dltbench::strategy
