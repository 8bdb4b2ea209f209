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

#include <dltbench/bench/config.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace dltbench::bench {

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out) {
    if (auto it = j.find(key); it != j.end()) {
        try {
            out = it->get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string{"config field \""} + key + "\": " + e.what());
        }
    }
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& known,
                         const std::string& scope) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (known.find(key) == known.end()) {
            throw ConfigError("unknown config key " + scope + "\"" + key + "\"");
        }
    }
}

}  // namespace

nlohmann::json schedule_to_json(const gas::GasSchedule& s) {
    return {{"tx_base", s.tx_base},
            {"calldata_nonzero_byte", s.calldata_nonzero_byte},
            {"calldata_zero_byte", s.calldata_zero_byte},
            {"sstore_new_slot", s.sstore_new_slot},
            {"sstore_update_slot", s.sstore_update_slot},
            {"log_base", s.log_base},
            {"log_topic", s.log_topic},
            {"log_data_byte", s.log_data_byte},
            {"contract_overhead", s.contract_overhead}};
}

gas::GasSchedule schedule_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known{
        "tx_base",        "calldata_nonzero_byte", "calldata_zero_byte",
        "sstore_new_slot", "sstore_update_slot",    "log_base",
        "log_topic",       "log_data_byte",         "contract_overhead"};
    reject_unknown_keys(j, known, "gas_schedule.");
    gas::GasSchedule s;
    read_field(j, "tx_base", s.tx_base);
    read_field(j, "calldata_nonzero_byte", s.calldata_nonzero_byte);
    read_field(j, "calldata_zero_byte", s.calldata_zero_byte);
    read_field(j, "sstore_new_slot", s.sstore_new_slot);
    read_field(j, "sstore_update_slot", s.sstore_update_slot);
    read_field(j, "log_base", s.log_base);
    read_field(j, "log_topic", s.log_topic);
    read_field(j, "log_data_byte", s.log_data_byte);
    read_field(j, "contract_overhead", s.contract_overhead);
    return s;
}

BenchConfig BenchConfig::from_json(const nlohmann::json& j) {
    static const std::set<std::string> known{
        "input_v1",          "input_v2",          "strategies",
        "batch_size",        "max_tx_payload_bytes", "bucket_width",
        "output_dir",        "seed",              "public_block_capacity",
        "private_block_capacity", "public_max_tx_payload_bytes", "anchor_per_op",
        "parallel",          "submitter",         "gas_schedule",
        "reference_added",   "reference_updated", "reference_deleted"};
    reject_unknown_keys(j, known, "");

    BenchConfig config;
    read_field(j, "input_v1", config.input_v1);
    read_field(j, "input_v2", config.input_v2);
    read_field(j, "strategies", config.strategies);
    read_field(j, "batch_size", config.batch_size);
    read_field(j, "max_tx_payload_bytes", config.max_tx_payload_bytes);
    read_field(j, "bucket_width", config.bucket_width);
    read_field(j, "output_dir", config.output_dir);
    read_field(j, "seed", config.seed);
    read_field(j, "public_block_capacity", config.public_block_capacity);
    read_field(j, "private_block_capacity", config.private_block_capacity);
    read_field(j, "public_max_tx_payload_bytes", config.public_max_tx_payload_bytes);
    read_field(j, "anchor_per_op", config.anchor_per_op);
    read_field(j, "parallel", config.parallel);
    read_field(j, "submitter", config.submitter);
    read_field(j, "reference_added", config.reference_added);
    read_field(j, "reference_updated", config.reference_updated);
    read_field(j, "reference_deleted", config.reference_deleted);
    if (auto it = j.find("gas_schedule"); it != j.end()) {
        config.schedule = schedule_from_json(*it);
    }
    config.validate();
    return config;
}

BenchConfig BenchConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return from_json(j);
}

nlohmann::json BenchConfig::to_json() const {
    return {{"input_v1", input_v1},
            {"input_v2", input_v2},
            {"strategies", strategies},
            {"batch_size", batch_size},
            {"max_tx_payload_bytes", max_tx_payload_bytes},
            {"bucket_width", bucket_width},
            {"output_dir", output_dir},
            {"seed", seed},
            {"public_block_capacity", public_block_capacity},
            {"private_block_capacity", private_block_capacity},
            {"public_max_tx_payload_bytes", public_max_tx_payload_bytes},
            {"anchor_per_op", anchor_per_op},
            {"parallel", parallel},
            {"submitter", submitter},
            {"gas_schedule", schedule_to_json(schedule)},
            {"reference_added", reference_added},
            {"reference_updated", reference_updated},
            {"reference_deleted", reference_deleted}};
}

strategy::StrategyConfig BenchConfig::strategy_config() const {
    strategy::StrategyConfig sc;
    sc.batch_size = batch_size;
    sc.max_tx_payload_bytes = max_tx_payload_bytes;
    sc.public_block_capacity = public_block_capacity;
    sc.private_block_capacity = private_block_capacity;
    sc.public_max_tx_payload_bytes = public_max_tx_payload_bytes;
    sc.anchor_per_op = anchor_per_op;
    sc.schedule = schedule;
    sc.submitter = submitter;
    return sc;
}

void BenchConfig::validate() const {
    if (bucket_width == 0) {
        throw ConfigError("bucket_width must be at least 1");
    }
    if (batch_size == 0) {
        throw ConfigError("batch_size must be at least 1");
    }
    if (strategies.empty()) {
        throw ConfigError("at least one strategy must be selected");
    }
    const std::vector<std::string> valid = strategy::all_strategy_names();
    for (const std::string& name : strategies) {
        if (std::find(valid.begin(), valid.end(), name) == valid.end()) {
            throw ConfigError("unknown strategy \"" + name + "\"");
        }
    }
    if (std::set<std::string>(strategies.begin(), strategies.end()).size() != strategies.size()) {
        throw ConfigError("duplicate strategy selection");
    }
}

}  // namespace dltbench::bench
