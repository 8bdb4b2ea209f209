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

#include <dltbench/bench/cli.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dltbench/bench/config.hpp>
#include <dltbench/bench/pipeline.hpp>
#include <dltbench/bench/synthetic.hpp>
#include <dltbench/query/query.hpp>

namespace dltbench::bench {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string config_path;
    std::string input_v1;
    std::string input_v2;
    std::string output_dir;
    std::vector<std::string> strategies;
    std::uint64_t batch_size{0};
    std::uint64_t bucket_width{0};
    std::uint64_t seed{0};
    std::uint64_t max_tx_payload_bytes{0};
    bool anchor_per_op{false};
    bool parallel{false};
    std::string submitter;

    CLI::App* app{nullptr};

    void attach(CLI::App& cmd) {
        app = &cmd;
        cmd.add_option("--config", config_path, "JSON config file; flags override its fields");
        cmd.add_option("--input-v1", input_v1, "version-1 graph (.nt or .ttl)");
        cmd.add_option("--input-v2", input_v2, "version-2 graph (.nt or .ttl)");
        cmd.add_option("--output-dir", output_dir, "run directory for ledgers, metrics and tables");
        cmd.add_option("--strategies", strategies,
                       "strategies to run (public_direct public_contract private_batched hybrid_anchored)");
        cmd.add_option("--batch-size", batch_size, "operations per private batch (default 1000)");
        cmd.add_option("--bucket-width", bucket_width, "operations per report bucket (default 100000)");
        cmd.add_option("--seed", seed, "deterministic seed");
        cmd.add_option("--max-tx-payload-bytes", max_tx_payload_bytes,
                       "private transaction payload cap (default 49 MB)");
        cmd.add_flag("--anchor-per-op", anchor_per_op, "hybrid: anchor every operation, not every batch");
        cmd.add_flag("--parallel", parallel, "run strategies concurrently (timings not comparable)");
        cmd.add_option("--submitter", submitter, "submitter identifier recorded on transactions");
    }

    BenchConfig resolve() const {
        BenchConfig config = config_path.empty() ? BenchConfig{} : BenchConfig::from_file(config_path);
        auto set_if = [&](const char* flag, auto& field, const auto& value) {
            if (app->count(flag) > 0) {
                field = value;
            }
        };
        set_if("--input-v1", config.input_v1, input_v1);
        set_if("--input-v2", config.input_v2, input_v2);
        set_if("--output-dir", config.output_dir, output_dir);
        set_if("--strategies", config.strategies, strategies);
        set_if("--batch-size", config.batch_size, batch_size);
        set_if("--bucket-width", config.bucket_width, bucket_width);
        set_if("--seed", config.seed, seed);
        set_if("--max-tx-payload-bytes", config.max_tx_payload_bytes, max_tx_payload_bytes);
        set_if("--anchor-per-op", config.anchor_per_op, anchor_per_op);
        set_if("--parallel", config.parallel, parallel);
        set_if("--submitter", config.submitter, submitter);
        config.validate();
        return config;
    }
};

TableFormat parse_table_format(const std::string& name) {
    if (name == "csv") {
        return TableFormat::kCsv;
    }
    if (name == "markdown" || name == "md") {
        return TableFormat::kMarkdown;
    }
    if (name == "both") {
        return TableFormat::kBoth;
    }
    throw ConfigError("unknown table format \"" + name + "\" (expected csv, markdown or both)");
}

std::optional<rdf::Term> parse_pattern_term(const std::string& token) {
    if (token == "?" || token == "*") {
        return std::nullopt;
    }
    try {
        return rdf::parse_nt_term(token);
    } catch (const rdf::ParseError& e) {
        throw ConfigError("bad pattern term \"" + token + "\": " + e.what());
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"RDF knowledge-graph storage benchmark over simulated distributed ledgers"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a deterministic synthetic N-Triples corpus");
    SyntheticSpec gen_spec;
    std::string gen_out;
    gen->add_option("--triples", gen_spec.triple_count, "number of triples")->required();
    gen->add_option("--seed", gen_spec.seed, "generator seed");
    gen->add_option("--mean-chars", gen_spec.mean_line_chars, "target mean canonical-line length");
    gen->add_option("--subject-pool", gen_spec.subject_pool, "distinct subjects");
    gen->add_option("--predicate-pool", gen_spec.predicate_pool, "distinct predicates");
    gen->add_option("-o,--out", gen_out, "output .nt file")->required();

    // ingest / update / reconstruct / audit / bench
    CommonOptions ingest_opts, update_opts, reconstruct_opts, audit_opts, bench_opts, query_opts;
    auto* ingest = app.add_subcommand("ingest", "store version 1 into every selected strategy");
    ingest_opts.attach(*ingest);
    auto* update = app.add_subcommand("update", "diff version 1 against version 2 and store the changes");
    update_opts.attach(*update);
    auto* reconstruct =
        app.add_subcommand("reconstruct", "load the ledgers and time full graph reconstruction");
    reconstruct_opts.attach(*reconstruct);
    auto* audit_cmd = app.add_subcommand("audit", "verify private batches against public anchors");
    audit_opts.attach(*audit_cmd);
    auto* bench = app.add_subcommand("bench", "full pipeline: ingest, update, reconstruct, audit, tables");
    bench_opts.attach(*bench);
    std::string bench_format{"both"};
    bench->add_option("--table-format", bench_format, "csv, markdown or both");

    // query
    auto* query_cmd = app.add_subcommand("query", "match a triple pattern against a reconstructed graph");
    query_opts.attach(*query_cmd);
    std::string query_strategy{std::string{strategy::kPrivateBatched}};
    std::vector<std::string> pattern_tokens;
    std::string export_path;
    query_cmd->add_option("--strategy", query_strategy, "strategy to reconstruct from");
    query_cmd->add_option("pattern", pattern_tokens,
                          "subject predicate object in N-Triples syntax; \"?\" is a wildcard");
    query_cmd->add_option("--export", export_path, "write the whole graph as N-Triples to this file");

    // show-schedule
    CommonOptions schedule_opts;
    auto* show_schedule = app.add_subcommand("show-schedule", "print the effective gas schedule");
    schedule_opts.attach(*show_schedule);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::vector<rdf::Triple> triples = synthetic_triples(gen_spec);
            std::ofstream file{gen_out, std::ios::trunc | std::ios::binary};
            if (!file) {
                throw ConfigError("cannot write " + gen_out);
            }
            file << to_ntriples_document(triples);
            out << "wrote " << triples.size() << " triple(s) to " << gen_out << "\n";
            return kExitSuccess;
        }
        if (ingest->parsed()) {
            Pipeline pipeline{ingest_opts.resolve(), out};
            pipeline.run_ingest();
            return kExitSuccess;
        }
        if (update->parsed()) {
            Pipeline pipeline{update_opts.resolve(), out};
            pipeline.run_update();
            return kExitSuccess;
        }
        if (reconstruct->parsed()) {
            Pipeline pipeline{reconstruct_opts.resolve(), out};
            pipeline.run_reconstruct();
            return kExitSuccess;
        }
        if (audit_cmd->parsed()) {
            Pipeline pipeline{audit_opts.resolve(), out};
            audit::AuditReport report = pipeline.run_audit();
            return report.clean() ? kExitSuccess : kExitFailure;
        }
        if (bench->parsed()) {
            Pipeline pipeline{bench_opts.resolve(), out};
            pipeline.run_bench(parse_table_format(bench_format));
            return kExitSuccess;
        }
        if (query_cmd->parsed()) {
            BenchConfig config = query_opts.resolve();
            auto strat = strategy::make_strategy(query_strategy, config.strategy_config());
            strat->load(config.output_dir);
            rdf::KnowledgeGraph graph = strat->reconstruct();
            if (!export_path.empty()) {
                std::ofstream file{export_path, std::ios::trunc | std::ios::binary};
                if (!file) {
                    throw ConfigError("cannot write " + export_path);
                }
                file << query::export_ntriples(graph);
                out << "exported " << graph.triple_count() << " triple(s) to " << export_path << "\n";
            }
            if (!pattern_tokens.empty()) {
                if (pattern_tokens.size() != 3) {
                    throw ConfigError("a pattern needs exactly three terms (use \"?\" for wildcards)");
                }
                query::TriplePattern pattern{parse_pattern_term(pattern_tokens[0]),
                                             parse_pattern_term(pattern_tokens[1]),
                                             parse_pattern_term(pattern_tokens[2])};
                for (const rdf::Triple& t : query::match_pattern(graph, pattern)) {
                    out << t.canonical_line() << "\n";
                }
            }
            return kExitSuccess;
        }
        if (show_schedule->parsed()) {
            BenchConfig config = schedule_opts.resolve();
            out << schedule_to_json(config.schedule).dump(2) << "\n";
            return kExitSuccess;
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace dltbench::bench
