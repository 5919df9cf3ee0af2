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

#include <optional>
#include <vector>

#include "dws/initial_data.hpp"
#include "dws/quadrature.hpp"
#include "dws/special_functions.hpp"

// Closed-form evaluation of u(x, t) for u_tt - Lap u + u_t = 0 with
// u(0) = f, u_t(0) = -f, as a diffusive Bessel-kernel integral plus a wave
// part damped by e^-t/2.

namespace dws
{
struct DimensionConstants
{
    int n = 1;
    double gamma = 0.5;
    double c = 0.5;
    KernelFamily family;

    static DimensionConstants of(int n);
};

struct EvalOptions
{
    PolarOrders orders;
    /// Re-evaluate with doubled orders and throw ConvergenceError when the
    /// results differ by more than `refinement_tol` of the integral scale.
    bool check_refinement = false;
    double refinement_tol = 1e-6;
};

struct DirectionalSecond
{
    Vec omega = Vec::Zero();
    double value = 0.0;
    double principal = 0.0;
};

struct FieldSample
{
    Vec x = Vec::Zero();
    double t = 0.0;
    double value = 0.0;
    double principal = 0.0;
    double wave_remainder = 0.0;
    /// e^(t/2) wave_remainder; stays representable when the product underflows.
    double wave_unscaled = 0.0;

    std::optional<Vec> gradient;
    std::optional<Vec> grad_principal;
    std::optional<Vec> grad_remainder_unscaled;
    std::vector<DirectionalSecond> dir2;
};

struct EvalRequest
{
    bool gradient = false;
    std::vector<Vec> directions;  // unit vectors for (omega . grad)^2 u
};

class SolutionEvaluator
{
public:
    explicit SolutionEvaluator(const InitialDatum& datum, EvalOptions options = {});

    const InitialDatum& datum() const { return datum_; }
    const EvalOptions& options() const { return options_; }

    FieldSample evaluate(const Vec& x, double t, const EvalRequest& request = {}) const;

    double value(const Vec& x, double t) const { return evaluate(x, t).value; }
    Vec gradient(const Vec& x, double t) const;
    double dir2(const Vec& x, double t, const Vec& omega) const;

private:
    FieldSample pass(const Vec& x, double t, const EvalRequest& request, const PolarOrders& orders,
                     std::vector<double>* scales) const;

    InitialDatum datum_;
    EvalOptions options_;
    DimensionConstants k_;
};

FieldSample eval_u(const InitialDatum& datum, const Vec& x, double t, const EvalOptions& options = {});
Vec eval_grad_u(const InitialDatum& datum, const Vec& x, double t, const EvalOptions& options = {});
double eval_dir2_u(const InitialDatum& datum, const Vec& x, double t, const Vec& omega,
                   const EvalOptions& options = {});

/// Radial profile for the principal term in arbitrary dimension.
struct RadialBump
{
    double radius = 1.0;
    double amplitude = 1.0;
};

/// Diffusive part at distance `distance` from the centre of a single
/// radial bump in R^n, any n >= 1. Multi-bump data is rejected for n >= 4.
double eval_principal_general_n(int n, const std::vector<RadialBump>& bumps, double distance, double t,
                                int order = 128);

/// Heat semigroup (4 pi t)^(-n/2) exp(-|x - y|^2 / 4t) applied to f.
double heat_eval(const InitialDatum& datum, const Vec& x, double t, const PolarOrders& orders = {});

struct DecayRow
{
    double t = 0.0;
    double value_metric = 0.0;     // sup |E(u)| e^(t/2) (1+t)^-n
    double gradient_metric = 0.0;  // sup |E(grad u)| e^(t/2) (1+t)^-(n+1)
};

/// Wave-remainder decay diagnostic over a deterministic sample of points
/// covering CS(f) + (t + d_f) B^n.
std::vector<DecayRow> error_decay_diagnostic(const InitialDatum& datum, const std::vector<double>& times,
                                             const EvalOptions& options = {});

}  // namespace dws
