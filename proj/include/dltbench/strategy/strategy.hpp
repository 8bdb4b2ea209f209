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

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <dltbench/gas/schedule.hpp>
#include <dltbench/ledger/ledger.hpp>
#include <dltbench/rdf/graph.hpp>
#include <dltbench/strategy/anchor.hpp>
#include <dltbench/strategy/batch.hpp>
#include <dltbench/strategy/triple_op.hpp>

namespace dltbench::strategy {

class StoreError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ReconstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kPublicDirect = "public_direct";
inline constexpr std::string_view kPublicContract = "public_contract";
inline constexpr std::string_view kPrivateBatched = "private_batched";
inline constexpr std::string_view kHybridAnchored = "hybrid_anchored";

std::vector<std::string> all_strategy_names();

struct StrategyConfig {
    std::uint64_t batch_size{1'000};
    // Hyperledger's default transaction cap.
    std::uint64_t max_tx_payload_bytes{49ull * 1024 * 1024};
    std::uint64_t public_block_capacity{100};
    std::uint64_t private_block_capacity{10};
    // Ethereum-style calldata limit for public-profile transactions.
    std::uint64_t public_max_tx_payload_bytes{128 * 1024};
    // Hybrid anchoring granularity: one anchor per batch (default) or one
    // anchor per operation, which forces single-op batches.
    bool anchor_per_op{false};
    gas::GasSchedule schedule{};
    std::string submitter{"bench"};
};

struct GasSample {
    std::uint64_t gas{0};
    std::uint64_t payload_chars{0};
};

struct StoreReceipt {
    std::vector<std::uint64_t> tx_indices;
    std::uint64_t total_gas{0};
    std::uint64_t total_payload_bytes{0};
    std::uint64_t op_count{0};
    // One entry per gas-charged public transaction; payload_chars is the
    // character count the gas was priced on (calldata, or anchor metadata).
    std::vector<GasSample> gas_samples;
};

// Uniform contract over the four storage strategies: feed operations in,
// get the current graph back out. A strategy owns its ledgers and state;
// callers serialize mutations. store() is not transactional: on a rejected
// operation, earlier operations of the same call remain applied.
class StorageStrategy {
  public:
    virtual ~StorageStrategy() = default;

    virtual std::string_view name() const = 0;
    virtual StoreReceipt store(std::span<const TripleOp> ops) = 0;
    virtual rdf::KnowledgeGraph reconstruct() const = 0;

    virtual std::uint64_t disk_usage() const = 0;
    virtual std::uint64_t transaction_count() const = 0;
    // Absent-triple deletes recorded so far (stateful strategies only).
    virtual std::uint64_t warning_count() const { return 0; }

    virtual void persist(const std::filesystem::path& dir) const = 0;
    virtual void load(const std::filesystem::path& dir) = 0;
};

// Stores every operation as its own public transaction, encoded with the
// DELETE:/UPDATE: prefixes. Keeps no state; reconstruction replays the
// whole chain.
class PublicDirectStrategy final : public StorageStrategy {
  public:
    explicit PublicDirectStrategy(StrategyConfig config);

    std::string_view name() const override { return kPublicDirect; }
    StoreReceipt store(std::span<const TripleOp> ops) override;
    rdf::KnowledgeGraph reconstruct() const override;
    std::uint64_t disk_usage() const override { return ledger_.disk_usage(); }
    std::uint64_t transaction_count() const override { return ledger_.transaction_count(); }
    void persist(const std::filesystem::path& dir) const override;
    void load(const std::filesystem::path& dir) override;

    const ledger::Ledger& public_ledger() const { return ledger_; }
    ledger::Ledger& mutable_public_ledger() { return ledger_; }

  private:
    StrategyConfig config_;
    ledger::Ledger ledger_;
};

// One contract call per operation: mutates a keyed state map, emits one
// event, and persists calldata, event log and slot writes in the
// transaction record. Reconstruction reads the state map directly.
class PublicContractStrategy final : public StorageStrategy {
  public:
    explicit PublicContractStrategy(StrategyConfig config);

    std::string_view name() const override { return kPublicContract; }
    StoreReceipt store(std::span<const TripleOp> ops) override;
    rdf::KnowledgeGraph reconstruct() const override { return state_; }
    std::uint64_t disk_usage() const override { return ledger_.disk_usage(); }
    std::uint64_t transaction_count() const override { return ledger_.transaction_count(); }
    std::uint64_t warning_count() const override { return warnings_; }
    void persist(const std::filesystem::path& dir) const override;
    void load(const std::filesystem::path& dir) override;

    const ledger::Ledger& public_ledger() const { return ledger_; }

  private:
    StrategyConfig config_;
    ledger::Ledger ledger_;
    rdf::KnowledgeGraph state_;
    std::uint64_t warnings_{0};
};

// Groups operations into batches (default 1,000 ops, 49 MB cap) stored as
// single gas-free transactions; maintains a world-state map with
// remove-then-insert update semantics.
class PrivateBatchedStrategy final : public StorageStrategy {
  public:
    explicit PrivateBatchedStrategy(StrategyConfig config);

    std::string_view name() const override { return kPrivateBatched; }
    StoreReceipt store(std::span<const TripleOp> ops) override;
    rdf::KnowledgeGraph reconstruct() const override { return state_; }
    std::uint64_t disk_usage() const override { return ledger_.disk_usage(); }
    std::uint64_t transaction_count() const override { return ledger_.transaction_count(); }
    std::uint64_t warning_count() const override { return warnings_; }
    void persist(const std::filesystem::path& dir) const override;
    void load(const std::filesystem::path& dir) override;

    const ledger::Ledger& private_ledger() const { return ledger_; }

  private:
    StrategyConfig config_;
    ledger::Ledger ledger_;
    rdf::KnowledgeGraph state_;
    std::uint64_t warnings_{0};
};

// Private batching plus one public anchor transaction per batch carrying
// the batch digest.
class HybridAnchoredStrategy final : public StorageStrategy {
  public:
    explicit HybridAnchoredStrategy(StrategyConfig config);

    std::string_view name() const override { return kHybridAnchored; }
    StoreReceipt store(std::span<const TripleOp> ops) override;
    rdf::KnowledgeGraph reconstruct() const override { return state_; }
    std::uint64_t disk_usage() const override {
        return private_ledger_.disk_usage() + public_ledger_.disk_usage();
    }
    std::uint64_t transaction_count() const override { return private_ledger_.transaction_count(); }
    std::uint64_t warning_count() const override { return warnings_; }
    void persist(const std::filesystem::path& dir) const override;
    void load(const std::filesystem::path& dir) override;

    const ledger::Ledger& private_ledger() const { return private_ledger_; }
    const ledger::Ledger& public_ledger() const { return public_ledger_; }
    ledger::Ledger& mutable_private_ledger() { return private_ledger_; }
    ledger::Ledger& mutable_public_ledger() { return public_ledger_; }

    std::uint64_t anchor_count() const { return public_ledger_.transaction_count(); }
    std::vector<AnchorRecord> anchors() const;

  private:
    StrategyConfig config_;
    ledger::Ledger private_ledger_;
    ledger::Ledger public_ledger_;
    rdf::KnowledgeGraph state_;
    std::uint64_t warnings_{0};
};

std::unique_ptr<StorageStrategy> make_strategy(std::string_view name, const StrategyConfig& config);

// Shared replay semantics: INSERT adds (duplicates ignored), DELETE removes
// (absence counted into `warnings` when given), UPDATE removes the old and
// inserts the new triple. `validate` makes an UPDATE with an absent old
// triple throw StoreError instead of silently inserting.
void apply_op_to_state(rdf::KnowledgeGraph& state, const TripleOp& op, bool validate,
                       std::uint64_t* warnings);

}  // namespace dltbench::strategy
