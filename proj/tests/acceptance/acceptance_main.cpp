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

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any gating criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <dltbench/audit/audit.hpp>
#include <dltbench/bench/pipeline.hpp>
#include <dltbench/bench/synthetic.hpp>
#include <dltbench/gas/schedule.hpp>
#include <dltbench/rdf/diff.hpp>
#include <dltbench/strategy/strategy.hpp>

#include "../support/generators.hpp"

namespace {

using namespace dltbench;
using Clock = std::chrono::steady_clock;

struct Checker {
    std::ostringstream why;
    bool ok{true};

    void require(bool condition, const std::string& detail) {
        if (!condition && ok) {
            ok = false;
            why << detail;
        }
    }
};

int g_failures = 0;

void run_criterion(const std::string& name, const std::function<void(Checker&)>& body) {
    Checker check;
    auto start = Clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string{"exception: "} + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (check.ok) {
        std::cout << "PASS — " << name << " (" << bench::format_fixed(seconds, 2) << "s)\n";
    } else {
        ++g_failures;
        std::cout << "FAIL — " << name << ": " << check.why.str() << "\n";
    }
    std::cout.flush();
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "dltbench-acceptance" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    out << content;
}

std::vector<strategy::TripleOp> as_inserts(const std::vector<rdf::Triple>& triples) {
    std::vector<strategy::TripleOp> ops;
    ops.reserve(triples.size());
    for (const rdf::Triple& t : triples) {
        ops.push_back(strategy::TripleOp::insert(t));
    }
    return ops;
}

double rel_dev(double actual, double reference) {
    return std::abs(actual - reference) / reference;
}

// ------------------------------------------------------------- criteria --

void gas_direct_column(Checker& check) {
    gas::GasSchedule schedule;
    std::uint64_t at78 = gas::direct_tx_gas(schedule, std::string(78, 'x'));
    check.require(at78 == 22'248, "78-byte payload costs " + std::to_string(at78) + ", expected 22248");
    check.require(rel_dev(static_cast<double>(at78), 22'280.0) < 0.002,
                  "78-byte payload deviates more than 0.2% from 22280");

    double total = 0;
    int count = 0;
    for (int i = 0; i < 14; ++i, ++count) {
        total += static_cast<double>(gas::direct_tx_gas(schedule, std::string(131, 'a')));
    }
    for (int i = 0; i < 11; ++i, ++count) {
        total += static_cast<double>(gas::direct_tx_gas(schedule, std::string(130, 'a')));
    }
    double mean = total / count;
    check.require(std::abs(mean - 23'088.96) < 0.01,
                  "mean gas at 130.56 chars is " + bench::format_fixed(mean, 2) + ", expected 23088.96");
    check.require(rel_dev(mean, 23'121.2) < 0.005, "mean deviates more than 0.5% from 23121.2");
}

void hybrid_anchor_constancy(Checker& check) {
    gas::GasSchedule schedule;

    // Anchor two real batches of 10 and 10,000 triples with equal-length
    // metadata; the recorded gas must be identical.
    bench::SyntheticSpec small_spec;
    small_spec.triple_count = 10;
    bench::SyntheticSpec large_spec;
    large_spec.triple_count = 10'000;
    auto small_ops = as_inserts(bench::synthetic_triples(small_spec));
    auto large_ops = as_inserts(bench::synthetic_triples(large_spec));
    auto small_batches = strategy::batch_triples(small_ops, 10'000, 49ull << 20);
    auto large_batches = strategy::batch_triples(large_ops, 10'000, 49ull << 20);
    check.require(small_batches.size() == 1 && large_batches.size() == 1, "expected one batch each");

    std::string metadata(184, 'm');
    ledger::Ledger public_a{{100, 1 << 20}};
    ledger::Ledger public_b{{100, 1 << 20}};
    strategy::anchor_batch(small_batches[0], public_a, schedule, "submitter", metadata);
    strategy::anchor_batch(large_batches[0], public_b, schedule, "submitter", metadata);
    std::uint64_t gas_small = public_a.transaction(0).gas_used;
    std::uint64_t gas_large = public_b.transaction(0).gas_used;
    check.require(gas_small == gas_large,
                  "anchor gas differs between 10 and 10000 triples: " + std::to_string(gas_small) +
                      " vs " + std::to_string(gas_large));

    std::uint64_t lo = gas::anchor_tx_gas(schedule, std::string(182, 'm'));
    std::uint64_t hi = gas::anchor_tx_gas(schedule, std::string(185, 'm'));
    double mean = (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0;
    check.require((hi - lo) / mean < 0.002, "182-185 char spread exceeds 0.2% of the mean");
}

void gas_ordering(Checker& check) {
    bench::SyntheticSpec spec;
    spec.triple_count = 10'000;
    auto ops = as_inserts(bench::synthetic_triples(spec));

    std::uint64_t totals[4] = {0, 0, 0, 0};
    const std::vector<std::string> names = strategy::all_strategy_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto strat = strategy::make_strategy(names[i], {});
        totals[i] = strat->store(ops).total_gas;
    }
    // names order: direct, contract, private, hybrid
    check.require(totals[1] > totals[0], "contract total not above direct total");
    check.require(totals[0] > totals[3], "direct total not above hybrid anchor total");
    check.require(totals[3] > 0, "hybrid anchor total is zero");
    check.require(totals[2] == 0, "private total gas must be zero");
}

void disk_ordering(Checker& check) {
    auto dir = scratch_dir("disk-ordering");
    bench::SyntheticSpec spec;
    spec.triple_count = 10'000;
    write_file(dir / "v1.nt", bench::to_ntriples_document(bench::synthetic_triples(spec)));

    bench::BenchConfig config;
    config.input_v1 = (dir / "v1.nt").string();
    config.output_dir = (dir / "run").string();
    config.bucket_width = 1'000;
    std::ostringstream log;
    bench::Pipeline pipeline{config, log};
    bench::PhaseReport report = pipeline.run_ingest();

    const bench::StrategyPhaseMetrics* by_name[4] = {};
    for (const bench::StrategyPhaseMetrics& m : report.strategies) {
        if (m.strategy == strategy::kPublicDirect) by_name[0] = &m;
        if (m.strategy == strategy::kPublicContract) by_name[1] = &m;
        if (m.strategy == strategy::kPrivateBatched) by_name[2] = &m;
        if (m.strategy == strategy::kHybridAnchored) by_name[3] = &m;
    }
    for (int i = 0; i < 4; ++i) {
        check.require(by_name[i] != nullptr, "missing strategy metrics");
        if (by_name[i] == nullptr) {
            return;
        }
    }
    std::size_t buckets = by_name[0]->buckets.size();
    check.require(buckets == 10, "expected 10 buckets, got " + std::to_string(buckets));
    for (int i = 1; i < 4; ++i) {
        check.require(by_name[i]->buckets.size() == buckets, "bucket count differs across strategies");
    }
    for (std::size_t b = 0; b < buckets; ++b) {
        std::uint64_t direct = by_name[0]->buckets[b].disk_bytes;
        std::uint64_t contract = by_name[1]->buckets[b].disk_bytes;
        std::uint64_t priv = by_name[2]->buckets[b].disk_bytes;
        std::uint64_t hybrid = by_name[3]->buckets[b].disk_bytes;
        check.require(priv <= hybrid, "bucket " + std::to_string(b) + ": private > hybrid");
        check.require(hybrid < direct, "bucket " + std::to_string(b) + ": hybrid >= direct");
        check.require(direct < contract, "bucket " + std::to_string(b) + ": direct >= contract");
    }
    for (int i = 0; i < 4; ++i) {
        for (std::size_t b = 1; b < by_name[i]->buckets.size(); ++b) {
            check.require(by_name[i]->buckets[b].disk_bytes >= by_name[i]->buckets[b - 1].disk_bytes,
                          by_name[i]->strategy + " disk usage not monotone");
        }
    }
}

void transaction_count_arithmetic(Checker& check) {
    bench::SyntheticSpec spec;
    spec.triple_count = 10'000;
    auto ops = as_inserts(bench::synthetic_triples(spec));

    strategy::PublicDirectStrategy direct{{}};
    direct.store(ops);
    check.require(direct.transaction_count() == 10'000,
                  "direct txs: " + std::to_string(direct.transaction_count()));

    strategy::PrivateBatchedStrategy priv{{}};
    priv.store(ops);
    check.require(priv.transaction_count() == 10,
                  "private batches: " + std::to_string(priv.transaction_count()));

    strategy::HybridAnchoredStrategy hybrid{{}};
    hybrid.store(ops);
    check.require(hybrid.anchor_count() == 10, "anchors: " + std::to_string(hybrid.anchor_count()));
}

void cross_strategy_equivalence(Checker& check) {
    std::mt19937_64 seeds{0xACCE5501};
    for (int round = 0; round < 1'000 && check.ok; ++round) {
        test::OpSequenceGenerator gen{seeds(), 50};
        auto ops = gen.sequence(1 + static_cast<std::size_t>(seeds() % 200));

        test::SetSimulation oracle;
        for (const strategy::TripleOp& op : ops) {
            oracle.apply(op);
        }
        for (const std::string& name : strategy::all_strategy_names()) {
            auto strat = strategy::make_strategy(name, {});
            strat->store(ops);
            if (!oracle.matches(strat->reconstruct())) {
                check.require(false, name + " diverged from the set simulation in round " +
                                         std::to_string(round));
                break;
            }
        }
    }
}

void update_pipeline(Checker& check) {
    struct Case {
        std::uint64_t triples;
        std::uint64_t seed;
    };
    for (const Case c : {Case{500, 11}, Case{1'500, 12}, Case{5'000, 13}}) {
        auto dir = scratch_dir("update-" + std::to_string(c.triples));
        bench::GraphPairSpec pair_spec;
        pair_spec.base_triples = c.triples;
        pair_spec.seed = c.seed;
        bench::GraphPair pair = bench::synthetic_graph_pair(pair_spec);
        write_file(dir / "v1.nt", bench::to_ntriples_document(pair.v1.triples()));
        write_file(dir / "v2.nt", bench::to_ntriples_document(pair.v2.triples()));

        bench::BenchConfig config;
        config.input_v1 = (dir / "v1.nt").string();
        config.input_v2 = (dir / "v2.nt").string();
        config.output_dir = (dir / "run").string();
        config.bucket_width = 1'000;
        std::ostringstream log;
        bench::Pipeline pipeline{config, log};
        pipeline.run_ingest();
        bench::PhaseReport update = pipeline.run_update();  // gates reconstruct == v2
        check.require(update.diff.has_value() && update.diff->updated == pair.updated,
                      "diff updated count mismatch at " + std::to_string(c.triples));

        // Re-load from disk and verify against version 2 once more.
        for (const std::string& name : strategy::all_strategy_names()) {
            auto strat = strategy::make_strategy(name, config.strategy_config());
            strat->load(config.output_dir);
            if (!(strat->reconstruct() == pair.v2)) {
                check.require(false, name + " does not hold version 2 after reload (" +
                                         std::to_string(c.triples) + " triples)");
            }
        }
    }
}

void audit_sensitivity(Checker& check) {
    bench::SyntheticSpec spec;
    spec.triple_count = 10'000;
    auto ops = as_inserts(bench::synthetic_triples(spec));
    strategy::HybridAnchoredStrategy hybrid{{}};
    hybrid.store(ops);  // 10 anchored batches

    audit::AuditReport clean = audit::audit_all(hybrid.private_ledger(), hybrid.public_ledger());
    check.require(clean.clean() && clean.matches == 10, "untampered run is not clean");

    std::string pristine = hybrid.private_ledger().serialize();
    std::mt19937_64 rng{0xACCE5502};
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        ledger::Ledger tampered = ledger::Ledger::deserialize(pristine);
        std::uint64_t victim = rng() % tampered.transaction_count();
        ledger::corrupt_payload_byte(tampered, victim, rng() % (1 << 24));
        audit::AuditReport report = audit::audit_all(tampered, hybrid.public_ledger());
        check.require(report.mismatches.size() == 1 &&
                          report.mismatches.front().private_tx_index == victim &&
                          report.matches == 9,
                      "trial " + std::to_string(trial) + " did not isolate batch " +
                          std::to_string(victim));
    }
}

void chain_integrity(Checker& check) {
    test::OpSequenceGenerator gen{0xACCE5503, 40};
    auto ops = gen.sequence(800);
    strategy::PrivateBatchedStrategy priv{{}};
    priv.store(ops);
    std::string bytes = priv.private_ledger().serialize();

    std::mt19937_64 rng{0xACCE5504};
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        std::string mutated = bytes;
        std::size_t pos = rng() % mutated.size();
        std::uint8_t flip = static_cast<std::uint8_t>(1 + rng() % 255);
        mutated[pos] = static_cast<char>(static_cast<std::uint8_t>(mutated[pos]) ^ flip);
        try {
            ledger::Ledger::deserialize(mutated);
            check.require(false, "mutation at byte " + std::to_string(pos) + " went undetected");
        } catch (const ledger::LedgerError&) {
            // format or corruption error: detected
        }
    }
}

void read_path_ordering(Checker& check) {
    auto dir = scratch_dir("read-path");
    bench::SyntheticSpec spec;
    spec.triple_count = 100'000;
    write_file(dir / "v1.nt", bench::to_ntriples_document(bench::synthetic_triples(spec)));

    bench::BenchConfig config;
    config.input_v1 = (dir / "v1.nt").string();
    config.output_dir = (dir / "run").string();
    std::ostringstream log;
    bench::Pipeline pipeline{config, log};
    pipeline.run_ingest();
    std::vector<bench::ReconstructRow> rows = pipeline.run_reconstruct();

    double direct_ms = 0;
    double others_max = 0;
    for (const bench::ReconstructRow& r : rows) {
        check.require(r.triples == 100'000, r.strategy + " lost triples");
        if (r.strategy == strategy::kPublicDirect) {
            direct_ms = r.total_ms;
        } else {
            others_max = std::max(others_max, r.total_ms);
        }
    }
    check.require(direct_ms >= 2.0 * others_max,
                  "direct reconstruction (" + bench::format_fixed(direct_ms, 1) +
                      " ms) is not at least twice the slowest state-map strategy (" +
                      bench::format_fixed(others_max, 1) + " ms)");
}

// Informational only: compares diff counts against the published KBPedia
// 2.10 -> 2.50 change counts when the two dumps are supplied via
// environment variables.
void diff_calibration() {
    const char* v1 = std::getenv("DLTBENCH_KBPEDIA_V1");
    const char* v2 = std::getenv("DLTBENCH_KBPEDIA_V2");
    if (v1 == nullptr || v2 == nullptr) {
        std::cout << "SKIP — diff calibration (set DLTBENCH_KBPEDIA_V1/V2 to the two dumps to enable)\n";
        return;
    }
    try {
        rdf::KnowledgeGraph g1{bench::Pipeline::load_input(v1)};
        rdf::KnowledgeGraph g2{bench::Pipeline::load_input(v2)};
        rdf::KGDiff d = rdf::diff(g1, g2);
        auto line = [](const char* label, std::size_t got, double reference) {
            std::cout << "INFO — diff calibration " << label << ": " << got << " vs reference "
                      << bench::format_fixed(reference, 0) << " ("
                      << bench::format_fixed(100.0 * (static_cast<double>(got) - reference) / reference, 2)
                      << "% deviation)\n";
        };
        line("added", d.added.size(), 137'948);
        line("updated", d.updated.size(), 80'696);
        line("deleted", d.deleted.size(), 467'165);
    } catch (const std::exception& e) {
        std::cout << "INFO — diff calibration failed to run: " << e.what() << "\n";
    }
}

}  // namespace

int main() {
    std::cout << "dltbench acceptance suite\n";
    run_criterion("gas model, direct column (78 bytes = 22248; 130.56-char mean = 23088.96)",
                  gas_direct_column);
    run_criterion("hybrid anchor constancy (batch-size independent; 182-185 char spread <= 0.2%)",
                  hybrid_anchor_constancy);
    run_criterion("gas ordering on 10k corpus (contract > direct > hybrid anchors > private = 0)",
                  gas_ordering);
    run_criterion("disk ordering per bucket (private <= hybrid < direct < contract, monotone)",
                  disk_ordering);
    run_criterion("transaction-count arithmetic (10000 direct txs, 10 batches, 10 anchors)",
                  transaction_count_arithmetic);
    run_criterion("cross-strategy reconstruction equivalence (1000 randomized sequences)",
                  cross_strategy_equivalence);
    run_criterion("update pipeline reconstructs version 2 (pairs up to 5000 triples)",
                  update_pipeline);
    run_criterion("audit sensitivity (200 single-byte tampers isolated, no false positives)",
                  audit_sensitivity);
    run_criterion("chain integrity (200 single-byte file mutations all detected)", chain_integrity);
    run_criterion("read-path ordering at 100k triples (direct >= 2x each state-map strategy)",
                  read_path_ordering);
    diff_calibration();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion/criteria FAILED\n";
        return 1;
    }
    std::cout << "all gating criteria passed\n";
    return 0;
}
