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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dws/convex_geometry.hpp"
#include "dws/solution.hpp"
#include "dws/sweeps.hpp"

// Null set, critical set, hot and cold spots of u(., t) for large t, and
// sampled certificates of the sign and envelope estimates behind them.

namespace dws
{
inline double null_reference_radius(int n, double t) { return std::sqrt(2.0 * n * t); }
inline double critical_reference_radius(int n, double t) { return std::sqrt((2.0 * n + 4.0) * t); }
/// sqrt((2n+5) t): large enough for both the null-set and critical-set regions.
inline double default_psi(int n, double t) { return std::sqrt((2.0 * n + 5.0) * t); }

struct RayRoot
{
    bool found = false;
    double rho = 0.0;
    double lo = 0.0, hi = 0.0;  // search bracket
    int iterations = 0;
};

/// Zero of rho -> u(xi + rho nu, t) on [sqrt(2nt) - d_f - 1, sqrt(2nt) + 1].
RayRoot trace_null_radius(const SolutionEvaluator& ev, double t, const NormalPoint& np, double tol = 1e-6);
/// Zero of rho -> nu . grad u(xi + rho nu, t) on [sqrt((2n+4)t) - d_f - 1, sqrt((2n+4)t) + 1].
RayRoot find_critical_radius(const SolutionEvaluator& ev, double t, const NormalPoint& np, double tol = 1e-6);

struct Spot
{
    Vec x = Vec::Zero();
    double value = 0.0;
    double hull_distance = 0.0;
};

std::vector<Spot> find_hot_spots(const SolutionEvaluator& ev, double t, const std::vector<NormalPoint>& bundle,
                                 Execution mode = Execution::parallel);

struct ColdSpot
{
    Vec x = Vec::Zero();
    double value = 0.0;
    int iterations = 0;
    bool in_hull = false;
};

/// Minimise u(., t) from `start` by gradient descent with a Newton step
/// along the gradient and Armijo backtracking. Throws ConvergenceError
/// after 1000 iterations.
ColdSpot find_cold_spot(const SolutionEvaluator& ev, double t, const Vec& start);
/// Starts from the centroid m_f.
ColdSpot find_cold_spot(const SolutionEvaluator& ev, double t);
/// An independent start inside CS(f): the incenter, or a point offset from
/// m_f when the two coincide.
Vec second_cold_start(const InitialDatum& datum);

enum class Proposition
{
    negativity_null,
    positivity_null,
    monotonicity_null,
    positivity_crit,
    negativity_crit,
    concavity_crit,
    lb_cs,
    ub_a,
    lb_a,
    ub_e,
    convex
};

const std::vector<Proposition>& all_propositions();
std::string proposition_name(Proposition p);
std::optional<Proposition> proposition_from_name(const std::string& name);

struct CertifyOptions
{
    int directions = 0;  // 0 picks 2 / 16 / 26 for n = 1 / 2 / 3
    int radial_samples = 12;
    int interior_samples = 48;
    int convex_pairs = 32;
    std::uint64_t seed = 0;
    /// psi(t) = sqrt(psi_factor t); defaults to 2n + 5.
    std::optional<double> psi_factor;
    Execution mode = Execution::parallel;
};

struct Certificate
{
    Proposition id = Proposition::negativity_null;
    bool pass = false;
    /// Smallest slack of the checked inequality over the samples; positive iff pass.
    double margin = 0.0;
    /// Right-hand side for the explicit envelopes, zero for sign statements.
    double bound = 0.0;
    int samples = 0;
};

/// Explicit right-hand side of lb_CS, ub_A, lb_A or ub_E.
double envelope_bound(const InitialDatum& datum, double t, Proposition p, double psi);

Certificate certify(const SolutionEvaluator& ev, double t, Proposition p, const CertifyOptions& options = {});
std::vector<Certificate> certify_signs(const SolutionEvaluator& ev, double t, const CertifyOptions& options = {});

struct Threshold
{
    bool found = false;
    double t = 0.0;
};

/// Smallest t = t_start 2^k <= t_max whose certificate passes at t, 2t and 4t.
Threshold empirical_threshold(const SolutionEvaluator& ev, Proposition p, const CertifyOptions& options = {},
                              double t_start = 1.0, double t_max = 1e5);

struct RateFit
{
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // root-mean-square misfit in log space
    int samples = 0;
};

/// Least-squares slope of log(quantity) against log(t).
RateFit rate_fit(const std::vector<double>& t, const std::vector<double>& quantity);

struct DirectionRecord
{
    NormalPoint normal;
    RayRoot null_root;
    RayRoot critical_root;
    double dir2_at_critical = 0.0;
};

struct SpotReport
{
    int n = 1;
    double t = 0.0;
    double psi = 0.0;
    double null_reference = 0.0;
    double critical_reference = 0.0;
    double diameter = 0.0;
    double hull_tol = 0.0;
    std::vector<DirectionRecord> directions;
    std::vector<Spot> hot_spots;
    std::optional<ColdSpot> cold_spot;
    std::optional<ColdSpot> cold_spot_second;
    double centroid_distance = 0.0;
    std::vector<Certificate> certificates;
};

struct ReportOptions
{
    bool nulls = true;
    bool criticals = true;
    bool spots = true;
    bool certificates = true;
    CertifyOptions certify;
};

SpotReport build_spot_report(const SolutionEvaluator& ev, double t, const ReportOptions& options = {});
nlohmann::json to_json(const SpotReport& report);

int default_direction_count(int n);

}  // namespace dws
