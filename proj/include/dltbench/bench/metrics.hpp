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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dltbench::bench {

// Running min/max/mean/total; durations are recorded in milliseconds.
struct Aggregate {
    std::uint64_t count{0};
    double total{0.0};
    double min{std::numeric_limits<double>::infinity()};
    double max{0.0};

    void add(double v) {
        ++count;
        total += v;
        min = v < min ? v : min;
        max = v > max ? v : max;
    }
    double mean() const { return count == 0 ? 0.0 : total / static_cast<double>(count); }
};

// Gas statistics with the character count each extreme was priced on
// (calldata characters, or anchor metadata characters for the hybrid).
struct GasAggregate {
    std::uint64_t count{0};
    std::uint64_t total_gas{0};
    std::uint64_t min_gas{std::numeric_limits<std::uint64_t>::max()};
    std::uint64_t max_gas{0};
    std::uint64_t chars_at_min{0};
    std::uint64_t chars_at_max{0};
    std::uint64_t total_chars{0};

    void add(std::uint64_t gas, std::uint64_t chars) {
        ++count;
        total_gas += gas;
        total_chars += chars;
        if (gas < min_gas) {
            min_gas = gas;
            chars_at_min = chars;
        }
        if (gas > max_gas) {
            max_gas = gas;
            chars_at_max = chars;
        }
    }
    double mean_gas() const { return count == 0 ? 0.0 : static_cast<double>(total_gas) / static_cast<double>(count); }
    double mean_chars() const {
        return count == 0 ? 0.0 : static_cast<double>(total_chars) / static_cast<double>(count);
    }
};

// Cumulative disk footprint at one operation-range boundary.
struct BucketRow {
    std::uint64_t lo{0};
    std::uint64_t hi{0};
    std::uint64_t ops{0};
    std::uint64_t disk_bytes{0};
};

struct StrategyPhaseMetrics {
    std::string strategy;
    std::vector<BucketRow> buckets;
    Aggregate write_ms;  // one sample per ledger write call
    GasAggregate gas;    // one sample per gas-charged public transaction
    std::uint64_t transactions{0};
    std::uint64_t ops{0};
    std::uint64_t warnings{0};
    std::uint64_t final_disk_bytes{0};
    bool gas_applicable{true};
};

struct ReconstructRow {
    std::string strategy;
    double total_ms{0.0};
    std::uint64_t triples{0};
};

struct AuditSummary {
    std::uint64_t batches_checked{0};
    std::uint64_t matches{0};
    std::uint64_t mismatches{0};
    std::uint64_t orphans{0};
    std::uint64_t unanchored{0};
    std::uint64_t duplicates{0};
};

struct DiffStats {
    std::uint64_t added{0};
    std::uint64_t updated{0};
    std::uint64_t deleted{0};
};

struct PhaseReport {
    std::string phase;  // "ingest" or "update"
    std::vector<StrategyPhaseMetrics> strategies;
    std::optional<DiffStats> diff;  // update phase only
};

// Everything a run has produced so far; persisted as metrics.json in the
// run directory so each CLI invocation can extend it.
struct RunMetrics {
    nlohmann::json config_echo;
    std::optional<PhaseReport> ingest;
    std::optional<PhaseReport> update;
    std::vector<ReconstructRow> reconstruct_after_ingest;
    std::vector<ReconstructRow> reconstruct_after_update;
    std::optional<AuditSummary> audit;

    nlohmann::json to_json() const;
    static RunMetrics from_json(const nlohmann::json& j);

    void save(const std::filesystem::path& path) const;
    static RunMetrics load_or_empty(const std::filesystem::path& path);

    // Flat event stream, one JSON object per line.
    std::string to_jsonl() const;
};

}  // namespace dltbench::bench
