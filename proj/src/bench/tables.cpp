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

#include <dltbench/bench/tables.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dltbench::bench {

namespace {

constexpr std::string_view kNotApplicable = "n/a";

std::string fmt_u64(std::uint64_t v) {
    return std::to_string(v);
}

std::string range_label(const BucketRow& b) {
    return fmt_u64(b.lo) + "-" + fmt_u64(b.hi);
}

Table disk_table(const PhaseReport& phase, const std::string& name) {
    Table t;
    t.name = name;
    t.header = {"ops_range"};
    for (const StrategyPhaseMetrics& m : phase.strategies) {
        t.header.push_back(m.strategy + "_disk_bytes");
    }
    std::size_t row_count = 0;
    for (const StrategyPhaseMetrics& m : phase.strategies) {
        row_count = std::max(row_count, m.buckets.size());
    }
    for (std::size_t i = 0; i < row_count; ++i) {
        std::vector<std::string> row;
        const BucketRow* labeled = nullptr;
        for (const StrategyPhaseMetrics& m : phase.strategies) {
            if (i < m.buckets.size()) {
                labeled = &m.buckets[i];
                break;
            }
        }
        row.push_back(labeled != nullptr ? range_label(*labeled) : "");
        for (const StrategyPhaseMetrics& m : phase.strategies) {
            row.push_back(i < m.buckets.size() ? fmt_u64(m.buckets[i].disk_bytes) : "");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table write_times_table(const PhaseReport& phase, const std::string& name) {
    Table t;
    t.name = name;
    t.header = {"stat"};
    for (const StrategyPhaseMetrics& m : phase.strategies) {
        t.header.push_back(m.strategy + "_ms");
    }
    auto row = [&](const std::string& stat, auto getter) {
        std::vector<std::string> cells{stat};
        for (const StrategyPhaseMetrics& m : phase.strategies) {
            cells.push_back(getter(m.write_ms));
        }
        t.rows.push_back(std::move(cells));
    };
    row("maximum", [](const Aggregate& a) { return format_fixed(a.count == 0 ? 0.0 : a.max, 3); });
    row("minimum", [](const Aggregate& a) { return format_fixed(a.count == 0 ? 0.0 : a.min, 3); });
    row("average", [](const Aggregate& a) { return format_fixed(a.mean(), 3); });
    row("total", [](const Aggregate& a) { return format_fixed(a.total, 3); });
    return t;
}

Table gas_table(const PhaseReport& phase, const std::string& name) {
    Table t;
    t.name = name;
    t.header = {"stat"};
    for (const StrategyPhaseMetrics& m : phase.strategies) {
        t.header.push_back(m.strategy + "_gas");
        t.header.push_back(m.strategy + "_chars");
    }
    auto cells_for = [](const StrategyPhaseMetrics& m, std::uint64_t gas, std::uint64_t chars,
                        bool mean) -> std::pair<std::string, std::string> {
        if (!m.gas_applicable) {
            return {std::string{kNotApplicable}, std::string{kNotApplicable}};
        }
        if (mean) {
            return {format_fixed(m.gas.mean_gas(), 2), format_fixed(m.gas.mean_chars(), 2)};
        }
        return {fmt_u64(gas), fmt_u64(chars)};
    };
    auto add_row = [&](const std::string& stat, bool mean, auto gas_of, auto chars_of) {
        std::vector<std::string> row{stat};
        for (const StrategyPhaseMetrics& m : phase.strategies) {
            auto [gas_cell, chars_cell] =
                cells_for(m, gas_of(m.gas), chars_of(m.gas), mean);
            row.push_back(gas_cell);
            row.push_back(chars_cell);
        }
        t.rows.push_back(std::move(row));
    };
    add_row(
        "maximum", false, [](const GasAggregate& g) { return g.max_gas; },
        [](const GasAggregate& g) { return g.chars_at_max; });
    add_row(
        "minimum", false, [](const GasAggregate& g) { return g.count == 0 ? 0 : g.min_gas; },
        [](const GasAggregate& g) { return g.chars_at_min; });
    add_row(
        "average", true, [](const GasAggregate& g) { return g.total_gas; },
        [](const GasAggregate& g) { return g.total_chars; });
    add_row(
        "total", false, [](const GasAggregate& g) { return g.total_gas; },
        [](const GasAggregate& g) { return g.total_chars; });
    return t;
}

Table read_times_table(const std::vector<ReconstructRow>& rows, const std::string& name) {
    Table t;
    t.name = name;
    t.header = {"strategy", "total_ms", "triples"};
    for (const ReconstructRow& r : rows) {
        t.rows.push_back({r.strategy, format_fixed(r.total_ms, 3), fmt_u64(r.triples)});
    }
    return t;
}

Table update_times_table(const RunMetrics& metrics) {
    const PhaseReport& update = *metrics.update;
    Table t;
    t.name = "update_times";
    t.header = {"stat"};
    for (const StrategyPhaseMetrics& m : update.strategies) {
        t.header.push_back(m.strategy + "_ms");
    }
    auto find_ingest_total = [&](const std::string& strategy) -> double {
        if (!metrics.ingest) {
            return 0.0;
        }
        for (const StrategyPhaseMetrics& m : metrics.ingest->strategies) {
            if (m.strategy == strategy) {
                return m.write_ms.total;
            }
        }
        return 0.0;
    };
    auto row = [&](const std::string& stat, auto getter) {
        std::vector<std::string> cells{stat};
        for (const StrategyPhaseMetrics& m : update.strategies) {
            cells.push_back(getter(m));
        }
        t.rows.push_back(std::move(cells));
    };
    row("maximum", [](const StrategyPhaseMetrics& m) {
        return format_fixed(m.write_ms.count == 0 ? 0.0 : m.write_ms.max, 3);
    });
    row("minimum", [](const StrategyPhaseMetrics& m) {
        return format_fixed(m.write_ms.count == 0 ? 0.0 : m.write_ms.min, 3);
    });
    row("average", [](const StrategyPhaseMetrics& m) { return format_fixed(m.write_ms.mean(), 3); });
    row("updating_time_only", [](const StrategyPhaseMetrics& m) { return format_fixed(m.write_ms.total, 3); });
    row("total_construction_and_update", [&](const StrategyPhaseMetrics& m) {
        return format_fixed(find_ingest_total(m.strategy) + m.write_ms.total, 3);
    });
    return t;
}

Table audit_table(const AuditSummary& audit) {
    Table t;
    t.name = "audit";
    t.header = {"batches_checked", "matches", "mismatches", "orphans", "unanchored", "duplicates"};
    t.rows.push_back({fmt_u64(audit.batches_checked), fmt_u64(audit.matches), fmt_u64(audit.mismatches),
                      fmt_u64(audit.orphans), fmt_u64(audit.unanchored), fmt_u64(audit.duplicates)});
    return t;
}

}  // namespace

std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            out += cells[i];
        }
        out.push_back('\n');
    };
    append_row(header);
    for (const auto& row : rows) {
        append_row(row);
    }
    return out;
}

std::string Table::to_markdown() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
        out.push_back('|');
        for (const std::string& cell : cells) {
            out.push_back(' ');
            out += cell;
            out += " |";
        }
        out.push_back('\n');
    };
    append_row(header);
    std::vector<std::string> rule(header.size(), "---");
    append_row(rule);
    for (const auto& row : rows) {
        append_row(row);
    }
    return out;
}

std::vector<Table> build_tables(const RunMetrics& metrics) {
    std::vector<Table> tables;
    if (metrics.ingest) {
        tables.push_back(disk_table(*metrics.ingest, "disk_ingest"));
        tables.push_back(write_times_table(*metrics.ingest, "write_times_ingest"));
        tables.push_back(gas_table(*metrics.ingest, "gas_ingest"));
    }
    if (!metrics.reconstruct_after_ingest.empty()) {
        tables.push_back(read_times_table(metrics.reconstruct_after_ingest, "read_times_after_ingest"));
    }
    if (metrics.update) {
        tables.push_back(disk_table(*metrics.update, "disk_update"));
        tables.push_back(update_times_table(metrics));
        tables.push_back(gas_table(*metrics.update, "gas_update"));
    }
    if (!metrics.reconstruct_after_update.empty()) {
        tables.push_back(read_times_table(metrics.reconstruct_after_update, "read_times_after_update"));
    }
    if (metrics.audit) {
        tables.push_back(audit_table(*metrics.audit));
    }
    return tables;
}

std::vector<std::filesystem::path> emit_tables(const RunMetrics& metrics,
                                               const std::filesystem::path& dir, TableFormat format) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto write_file = [&](const std::filesystem::path& path, const std::string& content) {
        std::ofstream out{path, std::ios::trunc | std::ios::binary};
        if (!out) {
            throw std::runtime_error("cannot write table file " + path.string());
        }
        out << content;
        written.push_back(path);
    };
    for (const Table& t : build_tables(metrics)) {
        if (format == TableFormat::kCsv || format == TableFormat::kBoth) {
            write_file(dir / (t.name + ".csv"), t.to_csv());
        }
        if (format == TableFormat::kMarkdown || format == TableFormat::kBoth) {
            write_file(dir / (t.name + ".md"), t.to_markdown());
        }
    }
    return written;
}

}  // namespace dltbench::bench
