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

#include <dltbench/ledger/ledger.hpp>

#include <algorithm>
#include <fstream>
#include <utility>

#include <dltbench/ledger/bytes.hpp>

namespace dltbench::ledger {

namespace {

std::string block_hash_material(const LedgerBlock& block, std::string_view payload_hashes) {
    std::string material;
    material.reserve(8 + 32 + payload_hashes.size() + 8);
    append_u64_le(material, block.height);
    material.append(reinterpret_cast<const char*>(block.prev_hash.data()), block.prev_hash.size());
    material += payload_hashes;
    append_u64_le(material, block.logical_timestamp);
    return material;
}

}  // namespace

Sha256Digest compute_block_hash(const LedgerBlock& block) {
    std::string payload_hashes;
    payload_hashes.reserve(block.transactions.size() * 32);
    for (const LedgerTransaction& tx : block.transactions) {
        Sha256Digest h = sha256(tx.payload);
        payload_hashes.append(reinterpret_cast<const char*>(h.data()), h.size());
    }
    return sha256(block_hash_material(block, payload_hashes));
}

Ledger::Ledger(LedgerConfig config) : config_{config} {
    if (config_.block_capacity == 0) {
        throw LedgerError("block_capacity must be positive");
    }
    if (config_.max_tx_payload_bytes == 0) {
        throw LedgerError("max_tx_payload_bytes must be positive");
    }
}

void Ledger::rehash_last_block() {
    LedgerBlock& block = blocks_.back();
    block.block_hash = sha256(block_hash_material(block, open_payload_hashes_));
}

std::uint64_t Ledger::append_transaction(std::string_view payload, std::string_view submitter,
                                         std::uint64_t gas_used) {
    if (payload.size() > config_.max_tx_payload_bytes) {
        throw OversizePayloadError(payload.size(), config_.max_tx_payload_bytes);
    }

    if (!last_block_open_) {
        LedgerBlock block;
        block.height = blocks_.size();
        block.prev_hash = blocks_.empty() ? kZeroDigest : blocks_.back().block_hash;
        blocks_.push_back(std::move(block));
        open_payload_hashes_.clear();
        disk_usage_ += kBlockOverheadBytes;
        last_block_open_ = true;
    }

    LedgerTransaction tx;
    tx.tx_index = tx_count_++;
    tx.payload.assign(payload.data(), payload.size());
    tx.submitter.assign(submitter.data(), submitter.size());
    tx.logical_timestamp = next_timestamp_++;
    tx.gas_used = gas_used;

    Sha256Digest payload_hash = sha256(tx.payload);
    open_payload_hashes_.append(reinterpret_cast<const char*>(payload_hash.data()), payload_hash.size());

    LedgerBlock& block = blocks_.back();
    block.logical_timestamp = tx.logical_timestamp;
    disk_usage_ += kTransactionOverheadBytes + tx.submitter.size() + tx.payload.size();
    block.transactions.push_back(std::move(tx));
    rehash_last_block();
    if (block.transactions.size() >= config_.block_capacity) {
        last_block_open_ = false;
    }
    return tx_count_ - 1;
}

void Ledger::seal() {
    // Openness is not persisted: a loaded ledger with a partial last block
    // accepts further appends.
    last_block_open_ = false;
}

ChainVerification Ledger::verify_chain() const {
    ChainVerification report;
    Sha256Digest expected_prev = kZeroDigest;
    std::uint64_t expected_tx_index = 0;
    std::uint64_t last_timestamp = 0;

    for (std::size_t h = 0; h < blocks_.size(); ++h) {
        const LedgerBlock& block = blocks_[h];
        if (block.height != h) {
            report.findings.push_back({h, "block height " + std::to_string(block.height) +
                                              " does not match chain position " + std::to_string(h)});
        }
        if (block.prev_hash != expected_prev) {
            report.findings.push_back({h, "prev_hash does not match preceding block hash"});
        }
        if (compute_block_hash(block) != block.block_hash) {
            report.findings.push_back({h, "block hash mismatch"});
        }
        if (block.transactions.empty()) {
            report.findings.push_back({h, "empty block"});
        }
        for (const LedgerTransaction& tx : block.transactions) {
            if (tx.tx_index != expected_tx_index) {
                report.findings.push_back({h, "transaction index " + std::to_string(tx.tx_index) +
                                                  " breaks dense ordering (expected " +
                                                  std::to_string(expected_tx_index) + ")"});
            }
            if (tx.logical_timestamp < last_timestamp) {
                report.findings.push_back({h, "logical timestamp decreases at tx " + std::to_string(tx.tx_index)});
            }
            last_timestamp = tx.logical_timestamp;
            ++expected_tx_index;
        }
        expected_prev = block.block_hash;
    }
    return report;
}

void Ledger::scan(const std::function<void(const LedgerTransaction&)>& visit) const {
    for (const LedgerBlock& block : blocks_) {
        for (const LedgerTransaction& tx : block.transactions) {
            visit(tx);
        }
    }
}

const LedgerTransaction& Ledger::transaction(std::uint64_t tx_index) const {
    if (tx_index >= tx_count_) {
        throw LedgerError("transaction index " + std::to_string(tx_index) + " out of range");
    }
    // Blocks other than the last are full unless force-sealed, which is rare;
    // walk from the arithmetic guess.
    std::size_t h = static_cast<std::size_t>(tx_index / config_.block_capacity);
    if (h >= blocks_.size()) {
        h = blocks_.size() - 1;
    }
    while (blocks_[h].transactions.front().tx_index > tx_index) {
        --h;
    }
    while (blocks_[h].transactions.back().tx_index < tx_index) {
        ++h;
    }
    const LedgerBlock& block = blocks_[h];
    return block.transactions[static_cast<std::size_t>(tx_index - block.transactions.front().tx_index)];
}

std::string Ledger::serialize() const {
    std::string out;
    out.reserve(disk_usage_);
    out += kMagic;
    append_u16_le(out, kFormatVersion);
    out.append(32, '\0');  // checksum placeholder
    append_u64_le(out, config_.block_capacity);
    append_u64_le(out, config_.max_tx_payload_bytes);
    append_u64_le(out, blocks_.size());
    for (const LedgerBlock& block : blocks_) {
        std::string body;
        append_u64_le(body, block.height);
        body.append(reinterpret_cast<const char*>(block.prev_hash.data()), block.prev_hash.size());
        body.append(reinterpret_cast<const char*>(block.block_hash.data()), block.block_hash.size());
        append_u64_le(body, block.logical_timestamp);
        append_u64_le(body, block.transactions.size());
        for (const LedgerTransaction& tx : block.transactions) {
            append_u64_le(body, tx.tx_index);
            append_u64_le(body, tx.logical_timestamp);
            append_u64_le(body, tx.gas_used);
            append_bytes(body, tx.submitter);
            append_bytes(body, tx.payload);
        }
        append_u64_le(out, body.size());
        out += body;
    }
    Sha256Digest checksum = sha256(std::string_view{out}.substr(38));
    out.replace(6, 32, reinterpret_cast<const char*>(checksum.data()), checksum.size());
    return out;
}

Ledger Ledger::deserialize(std::string_view bytes) {
    try {
        ByteReader reader{bytes};
        if (reader.read_raw(4) != kMagic) {
            throw LedgerFormatError("not a ledger file (bad magic)");
        }
        std::uint16_t version = reader.read_u16_le();
        if (version != kFormatVersion) {
            throw LedgerFormatError("unsupported ledger format version " + std::to_string(version));
        }
        std::string_view stored_checksum = reader.read_raw(32);
        Sha256Digest actual = sha256(bytes.substr(38));
        if (!std::equal(actual.begin(), actual.end(),
                        reinterpret_cast<const std::uint8_t*>(stored_checksum.data()))) {
            throw LedgerCorruptionError("ledger file checksum mismatch");
        }

        LedgerConfig config;
        config.block_capacity = reader.read_u64_le();
        config.max_tx_payload_bytes = reader.read_u64_le();
        Ledger ledger{config};

        std::uint64_t block_count = reader.read_u64_le();
        for (std::uint64_t h = 0; h < block_count; ++h) {
            std::string_view body = reader.read_bytes();
            ByteReader block_reader{body};
            LedgerBlock block;
            block.height = block_reader.read_u64_le();
            std::string_view prev = block_reader.read_raw(32);
            std::string_view hash = block_reader.read_raw(32);
            std::copy(prev.begin(), prev.end(), reinterpret_cast<char*>(block.prev_hash.data()));
            std::copy(hash.begin(), hash.end(), reinterpret_cast<char*>(block.block_hash.data()));
            block.logical_timestamp = block_reader.read_u64_le();
            std::uint64_t tx_count = block_reader.read_u64_le();
            block.transactions.reserve(static_cast<std::size_t>(tx_count));
            for (std::uint64_t i = 0; i < tx_count; ++i) {
                LedgerTransaction tx;
                tx.tx_index = block_reader.read_u64_le();
                tx.logical_timestamp = block_reader.read_u64_le();
                tx.gas_used = block_reader.read_u64_le();
                tx.submitter = std::string{block_reader.read_bytes()};
                tx.payload = std::string{block_reader.read_bytes()};
                block.transactions.push_back(std::move(tx));
            }
            if (!block_reader.exhausted()) {
                throw LedgerCorruptionError("trailing bytes inside block record");
            }
            ledger.blocks_.push_back(std::move(block));
        }
        if (!reader.exhausted()) {
            throw LedgerCorruptionError("trailing bytes after last block");
        }

        ledger.recount();
        ChainVerification verification = ledger.verify_chain();
        if (!verification.intact()) {
            throw LedgerCorruptionError("loaded ledger fails chain verification at block " +
                                        std::to_string(verification.findings.front().height) + ": " +
                                        verification.findings.front().description);
        }
        return ledger;
    } catch (const ByteReaderError& e) {
        throw LedgerCorruptionError(std::string{"truncated or corrupt ledger file: "} + e.what());
    }
}

void Ledger::recount() {
    tx_count_ = 0;
    next_timestamp_ = 0;
    disk_usage_ = kHeaderBytes;
    open_payload_hashes_.clear();
    for (const LedgerBlock& block : blocks_) {
        disk_usage_ += kBlockOverheadBytes;
        for (const LedgerTransaction& tx : block.transactions) {
            ++tx_count_;
            next_timestamp_ = tx.logical_timestamp + 1;
            disk_usage_ += kTransactionOverheadBytes + tx.submitter.size() + tx.payload.size();
        }
    }
    last_block_open_ = !blocks_.empty() && blocks_.back().transactions.size() < config_.block_capacity;
    if (last_block_open_) {
        for (const LedgerTransaction& tx : blocks_.back().transactions) {
            Sha256Digest h = sha256(tx.payload);
            open_payload_hashes_.append(reinterpret_cast<const char*>(h.data()), h.size());
        }
    }
}

void corrupt_payload_byte(Ledger& ledger, std::uint64_t tx_index, std::size_t byte_offset) {
    for (LedgerBlock& block : ledger.blocks_) {
        for (LedgerTransaction& tx : block.transactions) {
            if (tx.tx_index == tx_index) {
                if (tx.payload.empty()) {
                    throw LedgerError("cannot corrupt an empty payload");
                }
                tx.payload[byte_offset % tx.payload.size()] ^= 0x01;
                return;
            }
        }
    }
    throw LedgerError("transaction index " + std::to_string(tx_index) + " out of range");
}

void replace_block(Ledger& ledger, std::size_t height, LedgerBlock block) {
    if (height >= ledger.blocks_.size()) {
        throw LedgerError("block height out of range");
    }
    ledger.blocks_[height] = std::move(block);
}

void Ledger::persist(const std::filesystem::path& path) const {
    std::string bytes = serialize();
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out) {
        throw LedgerError("cannot open " + path.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw LedgerError("short write to " + path.string());
    }
}

Ledger Ledger::load(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw LedgerError("cannot open " + path.string() + " for reading");
    }
    std::string bytes{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    return deserialize(bytes);
}

}  // namespace dltbench::ledger
