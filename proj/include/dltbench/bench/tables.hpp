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
#include <string>
#include <vector>

#include <dltbench/bench/metrics.hpp>

namespace dltbench::bench {

enum class TableFormat {
    kCsv,
    kMarkdown,
    kBoth,
};

// A rendered table: header row plus body rows, encodable as CSV or
// Markdown from the same cells.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_markdown() const;
};

// Builds every table the collected metrics support: per-bucket disk usage,
// write times, gas (with "n/a" for the private strategy), read times,
// update timings and the audit summary.
std::vector<Table> build_tables(const RunMetrics& metrics);

// Renders the tables under dir; byte-deterministic for a fixed report.
// Returns the written file paths.
std::vector<std::filesystem::path> emit_tables(const RunMetrics& metrics,
                                               const std::filesystem::path& dir, TableFormat format);

// Deterministic fixed-point rendering used by every table cell.
std::string format_fixed(double value, int places);

}  // namespace dltbench::bench
