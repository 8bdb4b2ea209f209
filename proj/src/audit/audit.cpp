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

#include <dltbench/audit/audit.hpp>

#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

namespace dltbench::audit {

AnchorVerification verify_anchor(const ledger::Ledger& private_ledger,
                                 const strategy::AnchorRecord& anchor) {
    AnchorVerification result;
    auto tx_index = strategy::resolve_anchor_metadata(anchor.metadata);
    if (!tx_index) {
        result.verdict = AnchorVerdict::kOrphan;
        result.reason = "metadata does not name a private transaction";
        return result;
    }
    if (*tx_index >= private_ledger.transaction_count()) {
        result.verdict = AnchorVerdict::kOrphan;
        result.private_tx_index = *tx_index;
        result.reason = "metadata names nonexistent private transaction " + std::to_string(*tx_index);
        return result;
    }
    result.private_tx_index = *tx_index;
    result.expected = anchor.hash;
    result.found = sha256(private_ledger.transaction(*tx_index).payload);
    result.verdict = result.expected == result.found ? AnchorVerdict::kMatch : AnchorVerdict::kMismatch;
    return result;
}

AuditReport audit_all(const ledger::Ledger& private_ledger, const ledger::Ledger& public_ledger) {
    AuditReport report;
    std::map<std::uint64_t, std::vector<std::uint64_t>> anchors_per_batch;

    public_ledger.scan([&](const ledger::LedgerTransaction& tx) {
        strategy::AnchorRecord anchor;
        try {
            anchor = strategy::decode_anchor_record(tx.payload);
        } catch (const strategy::MalformedPayloadError& e) {
            report.orphans.push_back({tx.tx_index, std::string{"undecodable anchor payload: "} + e.what()});
            return;
        }
        AnchorVerification v = verify_anchor(private_ledger, anchor);
        switch (v.verdict) {
            case AnchorVerdict::kOrphan:
                report.orphans.push_back({tx.tx_index, v.reason});
                break;
            case AnchorVerdict::kMatch:
                ++report.batches_checked;
                ++report.matches;
                anchors_per_batch[v.private_tx_index].push_back(tx.tx_index);
                break;
            case AnchorVerdict::kMismatch:
                ++report.batches_checked;
                report.mismatches.push_back({v.private_tx_index, tx.tx_index, v.expected, v.found});
                anchors_per_batch[v.private_tx_index].push_back(tx.tx_index);
                break;
        }
    });

    private_ledger.scan([&](const ledger::LedgerTransaction& tx) {
        if (anchors_per_batch.find(tx.tx_index) == anchors_per_batch.end()) {
            report.unanchored.push_back(tx.tx_index);
        }
    });

    for (const auto& [private_tx, anchor_txs] : anchors_per_batch) {
        if (anchor_txs.size() > 1) {
            report.duplicates.push_back({private_tx, anchor_txs});
        }
    }
    return report;
}

void print_report(const AuditReport& report, std::ostream& out) {
    out << "audit: " << report.batches_checked << " anchored batch(es) checked, " << report.matches
        << " match(es), " << report.mismatches.size() << " mismatch(es), " << report.orphans.size()
        << " orphan anchor(s), " << report.unanchored.size() << " unanchored batch(es), "
        << report.duplicates.size() << " duplicate anchor set(s)\n";
    for (const MismatchFinding& m : report.mismatches) {
        out << "  mismatch: private tx " << m.private_tx_index << " anchored at public tx "
            << m.anchor_tx_index << "\n    anchored digest " << hex(m.expected)
            << "\n    computed digest " << hex(m.found) << "\n";
    }
    for (const OrphanFinding& o : report.orphans) {
        out << "  orphan: public tx " << o.anchor_tx_index << ": " << o.reason << "\n";
    }
    for (std::uint64_t tx : report.unanchored) {
        out << "  unanchored: private tx " << tx << " has no anchor\n";
    }
    for (const DuplicateFinding& d : report.duplicates) {
        out << "  duplicate: private tx " << d.private_tx_index << " anchored "
            << d.anchor_tx_indices.size() << " times\n";
    }
}

std::string report_jsonl(const AuditReport& report) {
    std::string out;
    auto emit = [&out](const nlohmann::json& j) {
        out += j.dump();
        out.push_back('\n');
    };
    for (const MismatchFinding& m : report.mismatches) {
        emit({{"finding", "mismatch"},
              {"private_tx", m.private_tx_index},
              {"anchor_tx", m.anchor_tx_index},
              {"expected_sha256", hex(m.expected)},
              {"found_sha256", hex(m.found)}});
    }
    for (const OrphanFinding& o : report.orphans) {
        emit({{"finding", "orphan"}, {"anchor_tx", o.anchor_tx_index}, {"reason", o.reason}});
    }
    for (std::uint64_t tx : report.unanchored) {
        emit({{"finding", "unanchored"}, {"private_tx", tx}});
    }
    for (const DuplicateFinding& d : report.duplicates) {
        emit({{"finding", "duplicate"},
              {"private_tx", d.private_tx_index},
              {"anchor_txs", d.anchor_tx_indices}});
    }
    return out;
}

}  // namespace dltbench::audit
