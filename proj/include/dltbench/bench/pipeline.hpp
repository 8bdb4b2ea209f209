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

#include <iosfwd>
#include <vector>

#include <dltbench/audit/audit.hpp>
#include <dltbench/bench/config.hpp>
#include <dltbench/bench/metrics.hpp>
#include <dltbench/bench/tables.hpp>
#include <dltbench/rdf/parse.hpp>

namespace dltbench::bench {

// Correctness-gate and phase-ordering failures; the CLI maps these to
// exit code 1.
class PipelineError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Runs the experiment phases over the configured strategies. Each phase
// persists ledgers and metrics into the run directory so phases can run in
// separate processes.
class Pipeline {
  public:
    explicit Pipeline(BenchConfig config, std::ostream& log);

    // Streams version-1 triples as INSERTs into every selected strategy.
    // Starts the run directory from scratch; removes partial outputs if the
    // phase fails.
    PhaseReport run_ingest();

    // Computes diff(v1, v2) and streams it as INSERT/UPDATE/DELETE ops.
    // Afterwards every strategy must reconstruct exactly to v2.
    PhaseReport run_update();

    // Loads the persisted ledgers, times reconstruct() per strategy, and
    // requires all results to be set-equal.
    std::vector<ReconstructRow> run_reconstruct();

    // Cross-checks the hybrid strategy's two ledgers.
    audit::AuditReport run_audit();

    // ingest -> reconstruct -> update -> reconstruct -> audit -> tables.
    void run_bench(TableFormat format);

    void emit(TableFormat format);

    const BenchConfig& config() const { return config_; }

    // Parses an .nt/.ttl input; errors carry the file name and position.
    static std::vector<rdf::Triple> load_input(const std::filesystem::path& path);

  private:
    std::filesystem::path run_dir() const { return config_.output_dir; }
    std::filesystem::path metrics_path() const { return run_dir() / "metrics.json"; }

    BenchConfig config_;
    std::ostream& log_;
};

}  // namespace dltbench::bench
