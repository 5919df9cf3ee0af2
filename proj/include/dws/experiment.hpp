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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dws/features.hpp"
#include "dws/reference_oracles.hpp"

// Config-driven experiment runs. Every mode writes plain CSV/JSON into the
// output directory; all file writes happen on the calling thread.

namespace dws
{
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode
{
    evaluate,
    null,
    critical,
    spots,
    certify,
    sweep,
    oracle_compare,
    asymptotics
};

Mode mode_from_name(const std::string& name);
std::string mode_name(Mode m);

struct GridSpec
{
    Vec lower = Vec::Constant(-5.0);
    Vec upper = Vec::Constant(5.0);
    std::vector<int> points;  // per axis; empty means 41 on each axis
};

struct OracleSpec
{
    OracleScheme scheme = OracleScheme::finite_difference_1d;
    double dx = 1.0 / 512.0;  // FD spacing; dt = dx / 2
    double half_width = 0.0;  // FD: 0 picks a wave-free width; spectral: torus half width
    int modes = 1024;
};

/// Which large-t form of the combined kernel to compare against.
enum class ExpansionKind
{
    sqrt_scale,  // r of order sqrt(t), through 1/t^2
    small_o,     // r = o(t)
    leading      // bounded r, leading term only
};

struct AsymptoticsSpec
{
    Parity parity = Parity::odd;
    int ell = 0;
    ExpansionKind kind = ExpansionKind::sqrt_scale;
    /// Radii as multiples of sqrt(t) (sqrt_scale, small_o) or absolute (leading).
    std::vector<double> radii = {0.0, 0.5, 1.0, 2.0};
};

struct ExperimentConfig
{
    nlohmann::json datum;
    Mode mode = Mode::evaluate;
    std::vector<double> times;
    GridSpec grid;
    int directions = 0;
    std::optional<double> psi_factor;
    OracleSpec oracle;
    AsymptoticsSpec asymptotics;
    PolarOrders quadrature;
    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;

    /// Throws ConfigError on a malformed or inconsistent config.
    static ExperimentConfig from_json(const nlohmann::json& j);
    void validate() const;
};

/// Either an explicit list or t_min * factor^k up to t_max (inclusive within 1e-9).
std::vector<double> geometric_times(double t_min, double t_max, double factor);

/// Runs the configured mode and returns the list of files written.
/// Numerical failures propagate as ConvergenceError.
std::vector<std::filesystem::path> run(const ExperimentConfig& config, std::ostream& log);

}  // namespace dws
