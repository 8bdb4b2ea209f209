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

#include <dltbench/bench/pipeline.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <future>
#include <ostream>
#include <span>

#include <dltbench/bench/synthetic.hpp>
#include <dltbench/query/query.hpp>
#include <dltbench/rdf/diff.hpp>

namespace dltbench::bench {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string lowercase_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return ext;
}

// One store() call per chunk: single operations for the per-transaction
// public strategies, one batch worth for the batched ones.
std::uint64_t chunk_size_for(std::string_view strategy_name, const BenchConfig& config) {
    if (strategy_name == strategy::kPrivateBatched ||
        (strategy_name == strategy::kHybridAnchored && !config.anchor_per_op)) {
        return config.batch_size;
    }
    return 1;
}

StrategyPhaseMetrics stream_ops(strategy::StorageStrategy& strat, std::span<const strategy::TripleOp> ops,
                                const BenchConfig& config, std::uint64_t start_counter) {
    StrategyPhaseMetrics metrics;
    metrics.strategy = std::string{strat.name()};
    metrics.gas_applicable = strat.name() != strategy::kPrivateBatched;

    const std::uint64_t chunk = chunk_size_for(strat.name(), config);
    const std::uint64_t width = config.bucket_width;
    std::uint64_t counter = start_counter;
    std::uint64_t bucket_lo = (counter / width) * width + 1;
    std::uint64_t bucket_ops = 0;

    std::uint64_t tx_before = strat.transaction_count();
    std::size_t offset = 0;
    while (offset < ops.size()) {
        std::size_t n = std::min<std::size_t>(chunk, ops.size() - offset);
        auto start = Clock::now();
        strategy::StoreReceipt receipt = strat.store(ops.subspan(offset, n));
        metrics.write_ms.add(elapsed_ms(start));
        for (const strategy::GasSample& sample : receipt.gas_samples) {
            metrics.gas.add(sample.gas, sample.payload_chars);
        }
        offset += n;
        // Disk usage is sampled after the chunk; a chunk spanning several
        // bucket boundaries stamps them all with the post-chunk footprint.
        std::uint64_t chunk_remaining = n;
        while (chunk_remaining > 0) {
            std::uint64_t hi = bucket_lo + width - 1;
            std::uint64_t take = std::min<std::uint64_t>(chunk_remaining, hi - counter);
            counter += take;
            bucket_ops += take;
            chunk_remaining -= take;
            if (counter == hi) {
                metrics.buckets.push_back({bucket_lo, hi, bucket_ops, strat.disk_usage()});
                bucket_lo += width;
                bucket_ops = 0;
            }
        }
    }
    if (bucket_ops > 0) {
        metrics.buckets.push_back({bucket_lo, counter, bucket_ops, strat.disk_usage()});
    }

    metrics.transactions = strat.transaction_count() - tx_before;
    metrics.ops = ops.size();
    metrics.warnings = strat.warning_count();
    metrics.final_disk_bytes = strat.disk_usage();
    return metrics;
}

}  // namespace

Pipeline::Pipeline(BenchConfig config, std::ostream& log) : config_{std::move(config)}, log_{log} {
    config_.validate();
}

std::vector<rdf::Triple> Pipeline::load_input(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw PipelineError("cannot open input file " + path.string());
    }
    std::string text{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    std::string ext = lowercase_extension(path);
    try {
        if (ext == ".nt" || ext == ".ntriples") {
            return rdf::parse_ntriples(text);
        }
        if (ext == ".ttl" || ext == ".turtle") {
            return rdf::parse_turtle(text);
        }
    } catch (const rdf::ParseError& e) {
        throw PipelineError(path.string() + ": " + e.what());
    }
    throw ConfigError("unsupported input extension \"" + ext + "\" (expected .nt or .ttl): " +
                      path.string());
}

PhaseReport Pipeline::run_ingest() {
    std::vector<rdf::Triple> triples = load_input(config_.input_v1);
    std::vector<strategy::TripleOp> ops;
    ops.reserve(triples.size());
    for (rdf::Triple& t : triples) {
        ops.push_back(strategy::TripleOp::insert(std::move(t)));
    }

    std::filesystem::create_directories(run_dir());
    PhaseReport phase;
    phase.phase = "ingest";

    auto ingest_one = [&](const std::string& name) {
        auto strat = strategy::make_strategy(name, config_.strategy_config());
        StrategyPhaseMetrics metrics = stream_ops(*strat, ops, config_, 0);
        strat->persist(run_dir());
        return metrics;
    };

    try {
        if (config_.parallel) {
            std::vector<std::future<StrategyPhaseMetrics>> futures;
            for (const std::string& name : config_.strategies) {
                futures.push_back(std::async(std::launch::async, ingest_one, name));
            }
            for (auto& f : futures) {
                phase.strategies.push_back(f.get());
            }
        } else {
            for (const std::string& name : config_.strategies) {
                phase.strategies.push_back(ingest_one(name));
            }
        }
    } catch (...) {
        // Half-written runs are useless for later phases.
        std::error_code ec;
        std::filesystem::remove_all(run_dir(), ec);
        throw;
    }

    RunMetrics metrics;  // a fresh ingest invalidates all previous phases
    metrics.config_echo = config_.to_json();
    metrics.ingest = phase;
    metrics.save(metrics_path());

    for (const StrategyPhaseMetrics& m : phase.strategies) {
        log_ << "ingest " << m.strategy << ": " << m.ops << " op(s), " << m.transactions
             << " transaction(s), " << m.final_disk_bytes << " ledger byte(s), total gas "
             << m.gas.total_gas << "\n";
    }
    return phase;
}

PhaseReport Pipeline::run_update() {
    RunMetrics metrics = RunMetrics::load_or_empty(metrics_path());
    if (!metrics.ingest) {
        throw PipelineError("run directory has no completed ingest phase: " + run_dir().string());
    }
    if (config_.input_v2.empty()) {
        throw PipelineError("update phase requires input_v2");
    }

    rdf::KnowledgeGraph v1{load_input(config_.input_v1)};
    rdf::KnowledgeGraph v2{load_input(config_.input_v2)};
    rdf::KGDiff d = rdf::diff(v1, v2);

    DiffStats stats{d.added.size(), d.updated.size(), d.deleted.size()};
    auto deviation = [](std::uint64_t got, std::uint64_t reference) {
        if (reference == 0) {
            return std::string{"n/a"};
        }
        double dev = 100.0 * (static_cast<double>(got) - static_cast<double>(reference)) /
                     static_cast<double>(reference);
        return format_fixed(dev, 2) + "%";
    };
    log_ << "diff: " << stats.added << " added (reference " << config_.reference_added << ", deviation "
         << deviation(stats.added, config_.reference_added) << "), " << stats.updated
         << " updated (reference " << config_.reference_updated << ", deviation "
         << deviation(stats.updated, config_.reference_updated) << "), " << stats.deleted
         << " deleted (reference " << config_.reference_deleted << ", deviation "
         << deviation(stats.deleted, config_.reference_deleted) << ")\n";

    std::vector<strategy::TripleOp> ops;
    ops.reserve(stats.added + stats.updated + stats.deleted);
    for (const rdf::Triple& t : d.added) {
        ops.push_back(strategy::TripleOp::insert(t));
    }
    for (const auto& [old_t, new_t] : d.updated) {
        ops.push_back(strategy::TripleOp::update(old_t, new_t));
    }
    for (const rdf::Triple& t : d.deleted) {
        ops.push_back(strategy::TripleOp::remove(t));
    }

    std::uint64_t ingest_ops = 0;
    for (const StrategyPhaseMetrics& m : metrics.ingest->strategies) {
        ingest_ops = std::max(ingest_ops, m.ops);
    }

    PhaseReport phase;
    phase.phase = "update";
    phase.diff = stats;

    auto update_one = [&](const std::string& name) {
        auto strat = strategy::make_strategy(name, config_.strategy_config());
        strat->load(run_dir());
        StrategyPhaseMetrics m = stream_ops(*strat, ops, config_, ingest_ops);
        strat->persist(run_dir());
        // Correctness gate: after the update stream, the strategy must hold
        // exactly version 2.
        if (!(strat->reconstruct() == v2)) {
            throw PipelineError("strategy " + name + " does not reconstruct to version 2 after update");
        }
        return m;
    };

    if (config_.parallel) {
        std::vector<std::future<StrategyPhaseMetrics>> futures;
        for (const std::string& name : config_.strategies) {
            futures.push_back(std::async(std::launch::async, update_one, name));
        }
        for (auto& f : futures) {
            phase.strategies.push_back(f.get());
        }
    } else {
        for (const std::string& name : config_.strategies) {
            phase.strategies.push_back(update_one(name));
        }
    }

    metrics.update = phase;
    metrics.reconstruct_after_update.clear();
    metrics.save(metrics_path());

    for (const StrategyPhaseMetrics& m : phase.strategies) {
        log_ << "update " << m.strategy << ": " << m.ops << " op(s), " << m.transactions
             << " transaction(s), total gas " << m.gas.total_gas << "\n";
    }
    return phase;
}

std::vector<ReconstructRow> Pipeline::run_reconstruct() {
    RunMetrics metrics = RunMetrics::load_or_empty(metrics_path());
    if (!metrics.ingest) {
        throw PipelineError("run directory has no completed ingest phase: " + run_dir().string());
    }

    std::vector<ReconstructRow> rows;
    std::vector<rdf::KnowledgeGraph> graphs;
    for (const std::string& name : config_.strategies) {
        auto strat = strategy::make_strategy(name, config_.strategy_config());
        strat->load(run_dir());
        auto start = Clock::now();
        rdf::KnowledgeGraph graph = strat->reconstruct();
        double ms = elapsed_ms(start);
        rows.push_back({name, ms, graph.triple_count()});
        graphs.push_back(std::move(graph));
    }
    for (std::size_t i = 1; i < graphs.size(); ++i) {
        if (!(graphs[i] == graphs[0])) {
            throw PipelineError("reconstruction mismatch: " + config_.strategies[i] + " differs from " +
                                config_.strategies[0]);
        }
    }

    auto& slot = metrics.update ? metrics.reconstruct_after_update : metrics.reconstruct_after_ingest;
    slot = rows;
    metrics.save(metrics_path());

    for (const ReconstructRow& r : rows) {
        log_ << "reconstruct " << r.strategy << ": " << r.triples << " triple(s) in "
             << format_fixed(r.total_ms, 3) << " ms\n";
    }
    return rows;
}

audit::AuditReport Pipeline::run_audit() {
    auto private_path = run_dir() / "hybrid_private.ledger";
    auto public_path = run_dir() / "hybrid_anchor.ledger";
    if (!std::filesystem::exists(private_path) || !std::filesystem::exists(public_path)) {
        throw PipelineError("no hybrid ledgers in " + run_dir().string());
    }
    ledger::Ledger private_ledger = ledger::Ledger::load(private_path);
    ledger::Ledger public_ledger = ledger::Ledger::load(public_path);
    audit::AuditReport report = audit::audit_all(private_ledger, public_ledger);

    audit::print_report(report, log_);
    std::ofstream jsonl{run_dir() / "audit.jsonl", std::ios::trunc};
    jsonl << audit::report_jsonl(report);

    RunMetrics metrics = RunMetrics::load_or_empty(metrics_path());
    metrics.audit = AuditSummary{report.batches_checked,        report.matches,
                                 report.mismatches.size(),      report.orphans.size(),
                                 report.unanchored.size(),      report.duplicates.size()};
    metrics.save(metrics_path());
    return report;
}

void Pipeline::emit(TableFormat format) {
    RunMetrics metrics = RunMetrics::load_or_empty(metrics_path());
    std::vector<std::filesystem::path> written = emit_tables(metrics, run_dir() / "tables", format);
    std::ofstream jsonl{run_dir() / "metrics.jsonl", std::ios::trunc};
    jsonl << metrics.to_jsonl();
    for (const auto& path : written) {
        log_ << "wrote " << path.string() << "\n";
    }
}

void Pipeline::run_bench(TableFormat format) {
    run_ingest();
    run_reconstruct();
    if (!config_.input_v2.empty()) {
        run_update();
        run_reconstruct();
    }
    bool has_hybrid = false;
    for (const std::string& name : config_.strategies) {
        has_hybrid = has_hybrid || name == strategy::kHybridAnchored;
    }
    if (has_hybrid) {
        audit::AuditReport report = run_audit();
        if (!report.clean()) {
            throw PipelineError("audit found " + std::to_string(report.finding_count()) + " finding(s)");
        }
    }
    emit(format);
}

}  // namespace dltbench::bench
