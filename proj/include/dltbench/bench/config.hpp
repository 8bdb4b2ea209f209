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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <dltbench/gas/schedule.hpp>
#include <dltbench/strategy/strategy.hpp>

namespace dltbench::bench {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Benchmark configuration. Loadable from a JSON file; CLI flags override
// individual fields. Unknown JSON keys are rejected.
struct BenchConfig {
    std::string input_v1;
    std::string input_v2;  // optional second graph version
    std::vector<std::string> strategies{strategy::all_strategy_names()};

    std::uint64_t batch_size{1'000};
    std::uint64_t max_tx_payload_bytes{49ull * 1024 * 1024};
    std::uint64_t bucket_width{100'000};
    std::string output_dir{"out"};
    std::uint64_t seed{42};

    std::uint64_t public_block_capacity{100};
    std::uint64_t private_block_capacity{10};
    std::uint64_t public_max_tx_payload_bytes{128 * 1024};
    bool anchor_per_op{false};
    bool parallel{false};
    std::string submitter{"bench"};

    gas::GasSchedule schedule{};

    // Published KBPedia 2.10 -> 2.50 change counts, printed next to the
    // computed diff for calibration. Informational only.
    std::uint64_t reference_added{137'948};
    std::uint64_t reference_updated{80'696};
    std::uint64_t reference_deleted{467'165};

    static BenchConfig from_json(const nlohmann::json& j);
    static BenchConfig from_file(const std::filesystem::path& path);
    nlohmann::json to_json() const;

    strategy::StrategyConfig strategy_config() const;

    // Throws ConfigError on out-of-range or inconsistent settings.
    void validate() const;
};

nlohmann::json schedule_to_json(const gas::GasSchedule& schedule);
gas::GasSchedule schedule_from_json(const nlohmann::json& j);

}  // namespace dltbench::bench
