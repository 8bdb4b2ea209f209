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
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <dltbench/ledger/sha256.hpp>

namespace dltbench::ledger {

class LedgerError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class OversizePayloadError : public LedgerError {
  public:
    OversizePayloadError(std::uint64_t payload_bytes, std::uint64_t limit)
        : LedgerError("transaction payload of " + std::to_string(payload_bytes) +
                      " bytes exceeds the " + std::to_string(limit) + "-byte limit"),
          payload_bytes_{payload_bytes},
          limit_{limit} {}

    std::uint64_t payload_bytes() const noexcept { return payload_bytes_; }
    std::uint64_t limit() const noexcept { return limit_; }

  private:
    std::uint64_t payload_bytes_;
    std::uint64_t limit_;
};

// Magic/version problems: the file is not one of ours or from a newer format.
class LedgerFormatError : public LedgerError {
  public:
    using LedgerError::LedgerError;
};

// Checksum, truncation or chain-verification failure on load. Load never
// yields a partial ledger.
class LedgerCorruptionError : public LedgerError {
  public:
    using LedgerError::LedgerError;
};

struct LedgerTransaction {
    std::uint64_t tx_index{0};
    std::string payload;
    std::string submitter;
    std::uint64_t logical_timestamp{0};
    std::uint64_t gas_used{0};

    friend bool operator==(const LedgerTransaction&, const LedgerTransaction&) = default;
};

struct LedgerBlock {
    std::uint64_t height{0};
    Sha256Digest prev_hash{};
    Sha256Digest block_hash{};
    std::vector<LedgerTransaction> transactions;
    std::uint64_t logical_timestamp{0};

    friend bool operator==(const LedgerBlock&, const LedgerBlock&) = default;
};

struct LedgerConfig {
    std::uint64_t block_capacity{100};
    // Hyperledger's default cap is 49 MB; the public profile configures this
    // down to an Ethereum-style calldata limit.
    std::uint64_t max_tx_payload_bytes{49ull * 1024 * 1024};

    friend bool operator==(const LedgerConfig&, const LedgerConfig&) = default;
};

struct ChainFinding {
    std::uint64_t height{0};
    std::string description;
};

struct ChainVerification {
    std::vector<ChainFinding> findings;

    bool intact() const noexcept { return findings.empty(); }
};

// Single-writer, append-only, hash-chained transaction log. The last block
// stays open until block_capacity transactions accumulate or seal() is
// called; its hash is kept current on every append. Logical timestamps are
// monotone counters, so identical append sequences produce byte-identical
// persisted files.
class Ledger {
  public:
    static constexpr std::string_view kMagic = "LGR1";
    static constexpr std::uint16_t kFormatVersion = 1;
    // magic + version + checksum + capacity + payload cap + block count
    static constexpr std::uint64_t kHeaderBytes = 4 + 2 + 32 + 8 + 8 + 8;
    static constexpr std::uint64_t kBlockOverheadBytes = 8 + 8 + 32 + 32 + 8 + 8;
    static constexpr std::uint64_t kTransactionOverheadBytes = 8 + 8 + 8 + 8 + 8;

    explicit Ledger(LedgerConfig config = {});

    std::uint64_t append_transaction(std::string_view payload, std::string_view submitter,
                                     std::uint64_t gas_used = 0);

    // Seals the open block early; a no-op when no block is open.
    void seal();

    ChainVerification verify_chain() const;

    void scan(const std::function<void(const LedgerTransaction&)>& visit) const;
    const LedgerTransaction& transaction(std::uint64_t tx_index) const;
    std::uint64_t transaction_count() const noexcept { return tx_count_; }

    // Exact byte size of the file persist() would write right now.
    std::uint64_t disk_usage() const noexcept { return disk_usage_; }

    void persist(const std::filesystem::path& path) const;
    static Ledger load(const std::filesystem::path& path);

    std::string serialize() const;
    static Ledger deserialize(std::string_view bytes);

    const std::vector<LedgerBlock>& blocks() const noexcept { return blocks_; }
    const LedgerConfig& config() const noexcept { return config_; }

    friend bool operator==(const Ledger& a, const Ledger& b) {
        return a.config_ == b.config_ && a.blocks_ == b.blocks_;
    }

  private:
    friend void corrupt_payload_byte(Ledger&, std::uint64_t, std::size_t);
    friend void replace_block(Ledger&, std::size_t, LedgerBlock);

    void rehash_last_block();
    void recount();

    LedgerConfig config_;
    std::vector<LedgerBlock> blocks_;
    bool last_block_open_{false};
    std::uint64_t tx_count_{0};
    std::uint64_t next_timestamp_{0};
    std::uint64_t disk_usage_{kHeaderBytes};
    // Concatenated payload hashes of the open block, to avoid rehashing
    // every payload on each append.
    std::string open_payload_hashes_;
};

// Recomputes a block's hash over height || prev_hash || per-transaction
// payload hashes || logical timestamp.
Sha256Digest compute_block_hash(const LedgerBlock& block);

// Fault injection for tamper-detection experiments: flips one bit of a
// stored payload without rehashing, exactly what a corrupted replica would
// look like.
void corrupt_payload_byte(Ledger& ledger, std::uint64_t tx_index, std::size_t byte_offset);

// Swaps in a foreign block, leaving hashes untouched (splice scenario).
void replace_block(Ledger& ledger, std::size_t height, LedgerBlock block);

}  // namespace dltbench::ledger
