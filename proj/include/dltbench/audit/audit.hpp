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
#include <iosfwd>
#include <string>
#include <vector>

#include <dltbench/ledger/ledger.hpp>
#include <dltbench/strategy/anchor.hpp>

namespace dltbench::audit {

enum class AnchorVerdict {
    kMatch,
    kMismatch,
    kOrphan,  // metadata does not resolve to a private transaction
};

struct MismatchFinding {
    std::uint64_t private_tx_index{0};
    std::uint64_t anchor_tx_index{0};
    Sha256Digest expected;  // hash stored in the anchor
    Sha256Digest found;     // hash recomputed over the private payload
};

struct OrphanFinding {
    std::uint64_t anchor_tx_index{0};
    std::string reason;
};

struct DuplicateFinding {
    std::uint64_t private_tx_index{0};
    std::vector<std::uint64_t> anchor_tx_indices;
};

// Deterministic cross-check of a private/public ledger pair. Zero findings
// means: every anchored payload hashes to its anchor, every anchor resolves,
// and batches and anchors are in one-to-one correspondence.
struct AuditReport {
    std::uint64_t batches_checked{0};
    std::uint64_t matches{0};
    std::vector<MismatchFinding> mismatches;
    std::vector<OrphanFinding> orphans;
    std::vector<std::uint64_t> unanchored;  // private tx indices with no anchor
    std::vector<DuplicateFinding> duplicates;

    bool clean() const {
        return mismatches.empty() && orphans.empty() && unanchored.empty() && duplicates.empty();
    }
    std::uint64_t finding_count() const {
        return mismatches.size() + orphans.size() + unanchored.size() + duplicates.size();
    }
};

struct AnchorVerification {
    AnchorVerdict verdict{AnchorVerdict::kMatch};
    std::uint64_t private_tx_index{0};
    Sha256Digest expected{};
    Sha256Digest found{};
    std::string reason;
};

// Recomputes the SHA-256 of the private transaction the anchor's metadata
// names and compares it against the anchored digest.
AnchorVerification verify_anchor(const ledger::Ledger& private_ledger,
                                 const strategy::AnchorRecord& anchor);

// Verifies every anchor on the public ledger and cross-checks that every
// private transaction has exactly one anchor.
AuditReport audit_all(const ledger::Ledger& private_ledger, const ledger::Ledger& public_ledger);

// Human-readable summary.
void print_report(const AuditReport& report, std::ostream& out);

// Machine-readable findings, one JSON object per line.
std::string report_jsonl(const AuditReport& report);

}  // namespace dltbench::audit
