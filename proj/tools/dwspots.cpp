// Copyright 2026 The dwspots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// dwspots: run a configured experiment.
//
//   dwspots --config run.json [--mode sweep] [--out DIR] [--seed N] [--t 200,400]
//
// Exit status: 0 on success (certificate failures included), 1 for a bad
// config or command line, 2 when a numerical procedure fails to converge.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dws/experiment.hpp"

namespace
{
std::vector<double> parse_time_list(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const std::string& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw dws::ConfigError("bad time value '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Damped wave hot and cold spot experiments"};
    std::string config_path, mode, out_dir;
    std::uint64_t seed = 0;
    std::vector<std::string> times;
    app.add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    app.add_option("--mode", mode, "override the config mode");
    app.add_option("--out", out_dir, "override the output directory");
    auto* seed_opt = app.add_option("--seed", seed, "override the sampling seed");
    app.add_option("--t", times, "override the time list (comma separated)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ifstream in(config_path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw dws::ConfigError(std::string("cannot parse config: ") + e.what());
        }
        if (!mode.empty()) j["mode"] = mode;
        if (!out_dir.empty()) j["output_dir"] = out_dir;
        if (*seed_opt) j["seed"] = seed;
        if (!times.empty()) {
            j["times"] = parse_time_list(times);
            j.erase("t_min");
        }
        const dws::ExperimentConfig config = dws::ExperimentConfig::from_json(j);
        dws::run(config, std::cout);
    } catch (const dws::ConvergenceError& e) {
        std::cerr << "dwspots: numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const dws::ConfigError& e) {
        std::cerr << "dwspots: config error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "dwspots: invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "dwspots: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
