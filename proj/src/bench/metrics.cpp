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

#include <dltbench/bench/metrics.hpp>

#include <filesystem>
#include <fstream>

namespace dltbench::bench {

namespace {

nlohmann::json aggregate_to_json(const Aggregate& a) {
    return {{"count", a.count},
            {"total", a.total},
            {"min", a.count == 0 ? 0.0 : a.min},
            {"max", a.max}};
}

Aggregate aggregate_from_json(const nlohmann::json& j) {
    Aggregate a;
    a.count = j.at("count").get<std::uint64_t>();
    a.total = j.at("total").get<double>();
    a.min = j.at("min").get<double>();
    a.max = j.at("max").get<double>();
    if (a.count == 0) {
        a.min = std::numeric_limits<double>::infinity();
    }
    return a;
}

nlohmann::json gas_to_json(const GasAggregate& g) {
    return {{"count", g.count},
            {"total_gas", g.total_gas},
            {"min_gas", g.count == 0 ? 0 : g.min_gas},
            {"max_gas", g.max_gas},
            {"chars_at_min", g.chars_at_min},
            {"chars_at_max", g.chars_at_max},
            {"total_chars", g.total_chars}};
}

GasAggregate gas_from_json(const nlohmann::json& j) {
    GasAggregate g;
    g.count = j.at("count").get<std::uint64_t>();
    g.total_gas = j.at("total_gas").get<std::uint64_t>();
    g.min_gas = j.at("min_gas").get<std::uint64_t>();
    g.max_gas = j.at("max_gas").get<std::uint64_t>();
    g.chars_at_min = j.at("chars_at_min").get<std::uint64_t>();
    g.chars_at_max = j.at("chars_at_max").get<std::uint64_t>();
    g.total_chars = j.at("total_chars").get<std::uint64_t>();
    if (g.count == 0) {
        g.min_gas = std::numeric_limits<std::uint64_t>::max();
    }
    return g;
}

nlohmann::json strategy_metrics_to_json(const StrategyPhaseMetrics& m) {
    nlohmann::json buckets = nlohmann::json::array();
    for (const BucketRow& b : m.buckets) {
        buckets.push_back({{"lo", b.lo}, {"hi", b.hi}, {"ops", b.ops}, {"disk_bytes", b.disk_bytes}});
    }
    return {{"strategy", m.strategy},
            {"buckets", buckets},
            {"write_ms", aggregate_to_json(m.write_ms)},
            {"gas", gas_to_json(m.gas)},
            {"transactions", m.transactions},
            {"ops", m.ops},
            {"warnings", m.warnings},
            {"final_disk_bytes", m.final_disk_bytes},
            {"gas_applicable", m.gas_applicable}};
}

StrategyPhaseMetrics strategy_metrics_from_json(const nlohmann::json& j) {
    StrategyPhaseMetrics m;
    m.strategy = j.at("strategy").get<std::string>();
    for (const nlohmann::json& b : j.at("buckets")) {
        m.buckets.push_back({b.at("lo").get<std::uint64_t>(), b.at("hi").get<std::uint64_t>(),
                             b.at("ops").get<std::uint64_t>(), b.at("disk_bytes").get<std::uint64_t>()});
    }
    m.write_ms = aggregate_from_json(j.at("write_ms"));
    m.gas = gas_from_json(j.at("gas"));
    m.transactions = j.at("transactions").get<std::uint64_t>();
    m.ops = j.at("ops").get<std::uint64_t>();
    m.warnings = j.at("warnings").get<std::uint64_t>();
    m.final_disk_bytes = j.at("final_disk_bytes").get<std::uint64_t>();
    m.gas_applicable = j.at("gas_applicable").get<bool>();
    return m;
}

nlohmann::json phase_to_json(const PhaseReport& p) {
    nlohmann::json strategies = nlohmann::json::array();
    for (const StrategyPhaseMetrics& m : p.strategies) {
        strategies.push_back(strategy_metrics_to_json(m));
    }
    nlohmann::json out{{"phase", p.phase}, {"strategies", strategies}};
    if (p.diff) {
        out["diff"] = {{"added", p.diff->added}, {"updated", p.diff->updated}, {"deleted", p.diff->deleted}};
    }
    return out;
}

PhaseReport phase_from_json(const nlohmann::json& j) {
    PhaseReport p;
    p.phase = j.at("phase").get<std::string>();
    for (const nlohmann::json& s : j.at("strategies")) {
        p.strategies.push_back(strategy_metrics_from_json(s));
    }
    if (auto it = j.find("diff"); it != j.end()) {
        p.diff = DiffStats{it->at("added").get<std::uint64_t>(), it->at("updated").get<std::uint64_t>(),
                           it->at("deleted").get<std::uint64_t>()};
    }
    return p;
}

nlohmann::json reconstruct_rows_to_json(const std::vector<ReconstructRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const ReconstructRow& r : rows) {
        out.push_back({{"strategy", r.strategy}, {"total_ms", r.total_ms}, {"triples", r.triples}});
    }
    return out;
}

std::vector<ReconstructRow> reconstruct_rows_from_json(const nlohmann::json& j) {
    std::vector<ReconstructRow> rows;
    for (const nlohmann::json& r : j) {
        rows.push_back({r.at("strategy").get<std::string>(), r.at("total_ms").get<double>(),
                        r.at("triples").get<std::uint64_t>()});
    }
    return rows;
}

}  // namespace

nlohmann::json RunMetrics::to_json() const {
    nlohmann::json out;
    out["config"] = config_echo;
    if (ingest) {
        out["ingest"] = phase_to_json(*ingest);
    }
    if (update) {
        out["update"] = phase_to_json(*update);
    }
    out["reconstruct_after_ingest"] = reconstruct_rows_to_json(reconstruct_after_ingest);
    out["reconstruct_after_update"] = reconstruct_rows_to_json(reconstruct_after_update);
    if (audit) {
        out["audit"] = {{"batches_checked", audit->batches_checked}, {"matches", audit->matches},
                        {"mismatches", audit->mismatches},           {"orphans", audit->orphans},
                        {"unanchored", audit->unanchored},           {"duplicates", audit->duplicates}};
    }
    return out;
}

RunMetrics RunMetrics::from_json(const nlohmann::json& j) {
    RunMetrics m;
    if (auto it = j.find("config"); it != j.end()) {
        m.config_echo = *it;
    }
    if (auto it = j.find("ingest"); it != j.end()) {
        m.ingest = phase_from_json(*it);
    }
    if (auto it = j.find("update"); it != j.end()) {
        m.update = phase_from_json(*it);
    }
    if (auto it = j.find("reconstruct_after_ingest"); it != j.end()) {
        m.reconstruct_after_ingest = reconstruct_rows_from_json(*it);
    }
    if (auto it = j.find("reconstruct_after_update"); it != j.end()) {
        m.reconstruct_after_update = reconstruct_rows_from_json(*it);
    }
    if (auto it = j.find("audit"); it != j.end()) {
        AuditSummary a;
        a.batches_checked = it->at("batches_checked").get<std::uint64_t>();
        a.matches = it->at("matches").get<std::uint64_t>();
        a.mismatches = it->at("mismatches").get<std::uint64_t>();
        a.orphans = it->at("orphans").get<std::uint64_t>();
        a.unanchored = it->at("unanchored").get<std::uint64_t>();
        a.duplicates = it->at("duplicates").get<std::uint64_t>();
        m.audit = a;
    }
    return m;
}

void RunMetrics::save(const std::filesystem::path& path) const {
    std::ofstream out{path, std::ios::trunc};
    if (!out) {
        throw std::runtime_error("cannot write metrics file " + path.string());
    }
    out << to_json().dump(2) << '\n';
}

RunMetrics RunMetrics::load_or_empty(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        return {};
    }
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

std::string RunMetrics::to_jsonl() const {
    std::string out;
    auto emit = [&out](const nlohmann::json& j) {
        out += j.dump();
        out.push_back('\n');
    };
    for (const PhaseReport* phase : {ingest ? &*ingest : nullptr, update ? &*update : nullptr}) {
        if (phase == nullptr) {
            continue;
        }
        for (const StrategyPhaseMetrics& m : phase->strategies) {
            for (const BucketRow& b : m.buckets) {
                emit({{"event", "bucket"},
                      {"phase", phase->phase},
                      {"strategy", m.strategy},
                      {"lo", b.lo},
                      {"hi", b.hi},
                      {"ops", b.ops},
                      {"disk_bytes", b.disk_bytes}});
            }
            emit({{"event", "phase_totals"},
                  {"phase", phase->phase},
                  {"strategy", m.strategy},
                  {"transactions", m.transactions},
                  {"ops", m.ops},
                  {"warnings", m.warnings},
                  {"total_write_ms", m.write_ms.total},
                  {"total_gas", m.gas.total_gas},
                  {"final_disk_bytes", m.final_disk_bytes}});
        }
        if (phase->diff) {
            emit({{"event", "diff"},
                  {"added", phase->diff->added},
                  {"updated", phase->diff->updated},
                  {"deleted", phase->diff->deleted}});
        }
    }
    for (const auto& [label, rows] :
         {std::pair{"after_ingest", &reconstruct_after_ingest}, std::pair{"after_update", &reconstruct_after_update}}) {
        for (const ReconstructRow& r : *rows) {
            emit({{"event", "reconstruct"},
                  {"phase", label},
                  {"strategy", r.strategy},
                  {"total_ms", r.total_ms},
                  {"triples", r.triples}});
        }
    }
    if (audit) {
        emit({{"event", "audit"},
              {"batches_checked", audit->batches_checked},
              {"matches", audit->matches},
              {"mismatches", audit->mismatches},
              {"orphans", audit->orphans},
              {"unanchored", audit->unanchored},
              {"duplicates", audit->duplicates}});
    }
    return out;
}

}  // namespace dltbench::bench
