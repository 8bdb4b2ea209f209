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

#include <dltbench/strategy/strategy.hpp>

#include <algorithm>

#include <dltbench/ledger/bytes.hpp>

namespace dltbench::strategy {

namespace {

ledger::LedgerConfig public_ledger_config(const StrategyConfig& config) {
    return {config.public_block_capacity, config.public_max_tx_payload_bytes};
}

ledger::LedgerConfig private_ledger_config(const StrategyConfig& config) {
    return {config.private_block_capacity, config.max_tx_payload_bytes};
}

std::string_view event_name(OpKind kind) {
    switch (kind) {
        case OpKind::kInsert:
            return "TripleInserted";
        case OpKind::kDelete:
            return "TripleDeleted";
        case OpKind::kUpdate:
            return "TripleUpdated";
    }
    return "?";
}

// Storage-slot writes charged for one contract call. Inserted strings take
// one slot per 32-byte chunk plus a length slot; deletes and updates also
// flip one existing bookkeeping slot. Nothing is refunded.
struct SlotCosts {
    std::uint64_t new_slots{0};
    std::uint64_t updated_slots{0};
};

SlotCosts contract_slot_costs(const TripleOp& op) {
    switch (op.kind()) {
        case OpKind::kInsert:
            return {gas::string_storage_slots(op.triple().canonical_line().size()), 0};
        case OpKind::kDelete:
            return {0, 1};
        case OpKind::kUpdate:
            return {gas::string_storage_slots(op.new_triple().canonical_line().size()), 1};
    }
    return {};
}

// What an archive node keeps for one contract transaction: the calldata,
// the emitted event (topic plus ABI-encoded data), and the slot writes.
// This is what makes the contract ledger heavier on disk than the direct
// one for identical semantic content.
std::string build_contract_tx_payload(const TripleOp& op, std::string_view calldata,
                                      const SlotCosts& slots) {
    std::string payload;
    append_bytes(payload, calldata);

    // One event: topic0 is the hash of the event signature.
    append_u64_le(payload, 1);
    Sha256Digest topic = sha256(event_name(op.kind()));
    payload.append(reinterpret_cast<const char*>(topic.data()), topic.size());

    // ABI-style data: offset word, length word, payload padded to 32 bytes.
    std::string event_data;
    event_data.append(32, '\0');
    append_u64_le(event_data, calldata.size());
    event_data.append(24, '\0');
    event_data += calldata;
    event_data.append((32 - calldata.size() % 32) % 32, '\0');
    append_bytes(payload, event_data);

    std::uint64_t slot_count = slots.new_slots + slots.updated_slots;
    append_u64_le(payload, slot_count);
    for (std::uint64_t i = 0; i < slot_count; ++i) {
        std::string key_material{calldata};
        append_u64_le(key_material, i);
        Sha256Digest key = sha256(key_material);
        payload.append(reinterpret_cast<const char*>(key.data()), key.size());
        // Value: the i-th 32-byte chunk of the calldata, zero padded.
        std::string value(32, '\0');
        std::size_t offset = static_cast<std::size_t>(i) * 32;
        if (offset < calldata.size()) {
            std::size_t n = std::min<std::size_t>(32, calldata.size() - offset);
            value.replace(0, n, calldata.substr(offset, n));
        }
        payload += value;
    }
    return payload;
}

std::string_view contract_tx_calldata(std::string_view tx_payload) {
    ByteReader reader{tx_payload};
    return reader.read_bytes();
}

}  // namespace

std::vector<std::string> all_strategy_names() {
    return {std::string{kPublicDirect}, std::string{kPublicContract}, std::string{kPrivateBatched},
            std::string{kHybridAnchored}};
}

void apply_op_to_state(rdf::KnowledgeGraph& state, const TripleOp& op, bool validate,
                       std::uint64_t* warnings) {
    switch (op.kind()) {
        case OpKind::kInsert:
            state.insert(op.triple());
            break;
        case OpKind::kDelete:
            if (!state.erase(op.triple()) && warnings != nullptr) {
                ++*warnings;
            }
            break;
        case OpKind::kUpdate:
            if (validate && !state.contains(op.old_triple())) {
                throw StoreError("UPDATE of absent triple: " + op.old_triple().canonical_line());
            }
            state.erase(op.old_triple());
            state.insert(op.new_triple());
            break;
    }
}

// ---------------------------------------------------------------- direct --

PublicDirectStrategy::PublicDirectStrategy(StrategyConfig config)
    : config_{std::move(config)}, ledger_{public_ledger_config(config_)} {}

StoreReceipt PublicDirectStrategy::store(std::span<const TripleOp> ops) {
    StoreReceipt receipt;
    for (const TripleOp& op : ops) {
        std::string payload = encode_direct_op(op);
        std::uint64_t gas = gas::direct_tx_gas(config_.schedule, payload);
        std::uint64_t payload_size = payload.size();
        std::uint64_t tx_index = ledger_.append_transaction(payload, config_.submitter, gas);
        receipt.tx_indices.push_back(tx_index);
        receipt.total_gas += gas;
        receipt.total_payload_bytes += payload_size;
        receipt.gas_samples.push_back({gas, payload_size});
        ++receipt.op_count;
    }
    return receipt;
}

rdf::KnowledgeGraph PublicDirectStrategy::reconstruct() const {
    rdf::KnowledgeGraph graph;
    ledger_.scan([&](const ledger::LedgerTransaction& tx) {
        TripleOp op = [&] {
            try {
                return decode_direct_op(tx.payload);
            } catch (const MalformedPayloadError& e) {
                throw ReconstructionError("malformed payload at tx " + std::to_string(tx.tx_index) +
                                          ": " + e.what());
            }
        }();
        apply_op_to_state(graph, op, /*validate=*/false, nullptr);
    });
    return graph;
}

void PublicDirectStrategy::persist(const std::filesystem::path& dir) const {
    ledger_.persist(dir / "public_direct.ledger");
}

void PublicDirectStrategy::load(const std::filesystem::path& dir) {
    ledger_ = ledger::Ledger::load(dir / "public_direct.ledger");
}

// -------------------------------------------------------------- contract --

PublicContractStrategy::PublicContractStrategy(StrategyConfig config)
    : config_{std::move(config)}, ledger_{public_ledger_config(config_)} {}

StoreReceipt PublicContractStrategy::store(std::span<const TripleOp> ops) {
    StoreReceipt receipt;
    for (const TripleOp& op : ops) {
        apply_op_to_state(state_, op, /*validate=*/true, &warnings_);

        std::string calldata = encode_direct_op(op);
        SlotCosts slots = contract_slot_costs(op);
        std::uint64_t gas = gas::contract_store_gas(
            config_.schedule, calldata, slots.new_slots, slots.updated_slots,
            /*event_count=*/1, /*event_topics=*/1,
            /*event_data_bytes=*/gas::abi_encoded_size(calldata.size()));

        std::string payload = build_contract_tx_payload(op, calldata, slots);
        std::uint64_t tx_index = ledger_.append_transaction(payload, config_.submitter, gas);
        receipt.tx_indices.push_back(tx_index);
        receipt.total_gas += gas;
        receipt.total_payload_bytes += payload.size();
        receipt.gas_samples.push_back({gas, calldata.size()});
        ++receipt.op_count;
    }
    return receipt;
}

void PublicContractStrategy::persist(const std::filesystem::path& dir) const {
    ledger_.persist(dir / "public_contract.ledger");
}

void PublicContractStrategy::load(const std::filesystem::path& dir) {
    ledger_ = ledger::Ledger::load(dir / "public_contract.ledger");
    state_ = rdf::KnowledgeGraph{};
    warnings_ = 0;
    ledger_.scan([&](const ledger::LedgerTransaction& tx) {
        TripleOp op = decode_direct_op(contract_tx_calldata(tx.payload));
        apply_op_to_state(state_, op, /*validate=*/false, &warnings_);
    });
}

// --------------------------------------------------------------- private --

PrivateBatchedStrategy::PrivateBatchedStrategy(StrategyConfig config)
    : config_{std::move(config)}, ledger_{private_ledger_config(config_)} {}

StoreReceipt PrivateBatchedStrategy::store(std::span<const TripleOp> ops) {
    StoreReceipt receipt;
    for (Batch& batch : batch_triples(ops, config_.batch_size, config_.max_tx_payload_bytes)) {
        for (const TripleOp& op : batch.ops) {
            apply_op_to_state(state_, op, /*validate=*/true, &warnings_);
        }
        std::uint64_t payload_size = batch.payload.size();
        std::uint64_t tx_index = ledger_.append_transaction(batch.payload, config_.submitter, 0);
        receipt.tx_indices.push_back(tx_index);
        receipt.total_payload_bytes += payload_size;
        receipt.op_count += batch.ops.size();
    }
    return receipt;
}

void PrivateBatchedStrategy::persist(const std::filesystem::path& dir) const {
    ledger_.persist(dir / "private_batched.ledger");
}

void PrivateBatchedStrategy::load(const std::filesystem::path& dir) {
    ledger_ = ledger::Ledger::load(dir / "private_batched.ledger");
    state_ = rdf::KnowledgeGraph{};
    warnings_ = 0;
    ledger_.scan([&](const ledger::LedgerTransaction& tx) {
        for (const TripleOp& op : decode_batch_payload(tx.payload)) {
            apply_op_to_state(state_, op, /*validate=*/false, &warnings_);
        }
    });
}

// ---------------------------------------------------------------- hybrid --

HybridAnchoredStrategy::HybridAnchoredStrategy(StrategyConfig config)
    : config_{std::move(config)},
      private_ledger_{private_ledger_config(config_)},
      public_ledger_{public_ledger_config(config_)} {}

StoreReceipt HybridAnchoredStrategy::store(std::span<const TripleOp> ops) {
    StoreReceipt receipt;
    std::uint64_t batch_size = config_.anchor_per_op ? 1 : config_.batch_size;
    for (Batch& batch : batch_triples(ops, batch_size, config_.max_tx_payload_bytes)) {
        for (const TripleOp& op : batch.ops) {
            apply_op_to_state(state_, op, /*validate=*/true, &warnings_);
        }
        std::uint64_t payload_size = batch.payload.size();
        std::uint64_t tx_index = private_ledger_.append_transaction(batch.payload, config_.submitter, 0);
        receipt.tx_indices.push_back(tx_index);
        receipt.total_payload_bytes += payload_size;
        receipt.op_count += batch.ops.size();

        AnchorRecord record = anchor_batch(batch, public_ledger_, config_.schedule, config_.submitter,
                                           make_anchor_metadata(tx_index, batch));
        std::uint64_t gas = gas::anchor_tx_gas(config_.schedule, record.metadata);
        receipt.total_gas += gas;
        receipt.total_payload_bytes += encode_anchor_record(record).size();
        receipt.gas_samples.push_back({gas, record.metadata.size()});
    }
    return receipt;
}

std::vector<AnchorRecord> HybridAnchoredStrategy::anchors() const {
    std::vector<AnchorRecord> records;
    public_ledger_.scan([&](const ledger::LedgerTransaction& tx) {
        records.push_back(decode_anchor_record(tx.payload));
    });
    return records;
}

void HybridAnchoredStrategy::persist(const std::filesystem::path& dir) const {
    private_ledger_.persist(dir / "hybrid_private.ledger");
    public_ledger_.persist(dir / "hybrid_anchor.ledger");
}

void HybridAnchoredStrategy::load(const std::filesystem::path& dir) {
    private_ledger_ = ledger::Ledger::load(dir / "hybrid_private.ledger");
    public_ledger_ = ledger::Ledger::load(dir / "hybrid_anchor.ledger");
    state_ = rdf::KnowledgeGraph{};
    warnings_ = 0;
    private_ledger_.scan([&](const ledger::LedgerTransaction& tx) {
        for (const TripleOp& op : decode_batch_payload(tx.payload)) {
            apply_op_to_state(state_, op, /*validate=*/false, &warnings_);
        }
    });
}

// --------------------------------------------------------------- factory --

std::unique_ptr<StorageStrategy> make_strategy(std::string_view name, const StrategyConfig& config) {
    if (name == kPublicDirect) {
        return std::make_unique<PublicDirectStrategy>(config);
    }
    if (name == kPublicContract) {
        return std::make_unique<PublicContractStrategy>(config);
    }
    if (name == kPrivateBatched) {
        return std::make_unique<PrivateBatchedStrategy>(config);
    }
    if (name == kHybridAnchored) {
        return std::make_unique<HybridAnchoredStrategy>(config);
    }
    throw std::invalid_argument("unknown strategy: \"" + std::string{name} + "\"");
}

}  // namespace dltbench::strategy
