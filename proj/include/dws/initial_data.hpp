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

#include <functional>
#include <vector>

#include "json.hpp"

#include "dws/convex_geometry.hpp"
#include "dws/types.hpp"

namespace dws
{
/// amplitude * exp(1 - R^2 / (R^2 - |y - center|^2)) inside B_R(center), zero outside.
struct SmoothBump
{
    Vec center = Vec::Zero();
    double radius = 1.0;
    double amplitude = 1.0;
};

/// Derivatives of one bump with respect to q = |y - center|^2, scaled by
/// the amplitude, together with d = y - center. In terms of these,
///   grad f = 2 h1 d,   Hess f = 4 h2 d d^T + 2 h1 I.
struct BumpJet
{
    double h0 = 0.0, h1 = 0.0, h2 = 0.0, h3 = 0.0;
    Vec d = Vec::Zero();

    Vec gradient() const { return 2.0 * h1 * d; }
    Mat hessian() const { return 4.0 * h2 * d * d.transpose() + 2.0 * h1 * Mat::Identity(); }
    /// Third derivative applied to (u, v, w).
    double third(const Vec& u, const Vec& v, const Vec& w) const;
};

BumpJet bump_jet(const SmoothBump& bump, const Vec& y);

/// int_0^1 exp(1 - 1/(1 - u^2)) u^(n-1) du, the radial moment of the unit profile.
double bump_profile_moment(int n);

class InitialDatum
{
public:
    InitialDatum(int n, std::vector<SmoothBump> bumps);
    /// {"dimension": n, "bumps": [{"center": [...], "radius": r, "amplitude": a}, ...]}
    static InitialDatum from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int dimension() const { return n_; }
    const std::vector<SmoothBump>& bumps() const { return bumps_; }

    const ConvexPolytope& hull() const { return hull_; }
    /// Hausdorff bound between the polytope and the true hull, plus 1e-6.
    double hull_tolerance() const { return hull_tol_; }
    double diameter() const { return diameter_; }
    /// Certified inscribed ball: the largest bump, not necessarily maximal.
    double inradius() const { return inradius_; }
    const Vec& incenter() const { return incenter_; }
    double mass() const { return mass_; }
    const Vec& centroid() const { return centroid_; }
    double inscribed_ball_mass() const { return inscribed_mass_; }
    double mass_of(int bump) const { return bump_mass_[bump]; }

    InitialDatum scaled(double factor) const;
    InitialDatum translated(const Vec& shift) const;

private:
    int n_;
    std::vector<SmoothBump> bumps_;
    ConvexPolytope hull_;
    double hull_tol_ = 0.0;
    double diameter_ = 0.0;
    double inradius_ = 0.0;
    Vec incenter_ = Vec::Zero();
    double mass_ = 0.0;
    Vec centroid_ = Vec::Zero();
    double inscribed_mass_ = 0.0;
    std::vector<double> bump_mass_;
};

double eval_f(const InitialDatum& datum, const Vec& x);
Vec eval_grad_f(const InitialDatum& datum, const Vec& x);
Mat eval_hessian_f(const InitialDatum& datum, const Vec& x);

/// int f(y) weight(y) dy by polar Gauss-Legendre rules centred on each
/// bump, checked against the rule of twice the order.
double integrate_f(const InitialDatum& datum, const std::function<double(const Vec&)>& weight, int order = 64);

/// Upper estimate of max_{|alpha| <= order} sup |d^alpha f| from dense samples.
double sobolev_sup_estimate(const InitialDatum& datum, int order);

}  // namespace dws
