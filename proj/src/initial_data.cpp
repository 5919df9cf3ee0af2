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


#include "dws/initial_data.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dws/quadrature.hpp"

namespace dws
{
namespace
{
constexpr int kCirclePoints = 256;
constexpr int kSpherePoints = 512;
// Above this value of R^2 / (R^2 - q) the bump and all its derivatives
// are below the smallest double.
constexpr double kFlatExponent = 700.0;

double sphere_area(int n) { return n == 1 ? 2.0 : n == 2 ? 2.0 * kPi : 4.0 * kPi; }

double polar_integral(const std::vector<SmoothBump>& bumps, int n, const std::function<double(const Vec&)>& weight,
                      int order)
{
    std::vector<RadialNode> radial;
    std::vector<SphereNode> sphere;
    const PolarOrders orders{order, order, std::max(16, order / 4)};
    double sum = 0.0;
    for (const SmoothBump& b : bumps) {
        if (b.amplitude == 0.0) continue;
        radial_nodes(0.0, b.radius, b.radius, order, radial);
        for (const RadialNode& rn : radial) {
            cap_nodes(n, b.center, b.center, b.radius, rn.rho, orders, sphere);
            double ang = 0.0;
            for (const SphereNode& sn : sphere) {
                const Vec y = b.center + rn.rho * sn.theta;
                ang += sn.w * bump_jet(b, y).h0 * weight(y);
            }
            sum += rn.w * std::pow(rn.rho, n - 1) * ang;
        }
    }
    return sum;
}

SmoothBump parse_bump(const nlohmann::json& j, int n)
{
    require(j.is_object(), "each bump must be a JSON object");
    const auto& c = j.at("center");
    require(c.is_array() && int(c.size()) == n, "bump center must have one coordinate per dimension");
    SmoothBump b;
    for (int k = 0; k < n; ++k) b.center[k] = c[k].get<double>();
    b.radius = j.at("radius").get<double>();
    b.amplitude = j.contains("amplitude") ? j.at("amplitude").get<double>() : 1.0;
    return b;
}

}  // namespace

double BumpJet::third(const Vec& u, const Vec& v, const Vec& w) const
{
    const double du = d.dot(u), dv = d.dot(v), dw = d.dot(w);
    return 8.0 * h3 * du * dv * dw + 4.0 * h2 * (u.dot(v) * dw + u.dot(w) * dv + v.dot(w) * du);
}

BumpJet bump_jet(const SmoothBump& bump, const Vec& y)
{
    BumpJet j;
    j.d = y - bump.center;
    const double R2 = bump.radius * bump.radius;
    const double w = R2 - j.d.squaredNorm();
    if (w <= 0.0 || R2 / w > kFlatExponent) return j;
    const double g1 = -R2 / (w * w);
    const double g2 = -2.0 * R2 / (w * w * w);
    const double g3 = -6.0 * R2 / (w * w * w * w);
    const double h = bump.amplitude * std::exp(1.0 - R2 / w);
    j.h0 = h;
    j.h1 = h * g1;
    j.h2 = h * (g1 * g1 + g2);
    j.h3 = h * (g1 * g1 * g1 + 3.0 * g1 * g2 + g3);
    return j;
}

double bump_profile_moment(int n)
{
    check_dimension(n);
    static const std::array<double, 3> cached = [] {
        std::array<double, 3> out{0.0, 0.0, 0.0};
        const GaussRule& g = gauss_legendre(512);
        for (int i = 0; i < 512; ++i) {
            const double u = 0.5 * (g.nodes[i] + 1.0);
            const double v = std::exp(1.0 - 1.0 / (1.0 - u * u)) * 0.5 * g.weights[i];
            out[0] += v;
            out[1] += v * u;
            out[2] += v * u * u;
        }
        return out;
    }();
    return cached[n - 1];
}

InitialDatum::InitialDatum(int n, std::vector<SmoothBump> bumps) : n_(n), bumps_(std::move(bumps))
{
    check_dimension(n);
    require(!bumps_.empty(), "initial datum needs at least one bump");
    bool positive = false;
    for (SmoothBump& b : bumps_) {
        require(b.radius > 0.0 && std::isfinite(b.radius), "bump radius must be positive");
        require(b.amplitude >= 0.0 && std::isfinite(b.amplitude), "bump amplitude must be non-negative");
        b.center = truncate(b.center, n);
        positive = positive || b.amplitude > 0.0;
    }
    require(positive, "initial datum must have a bump with positive amplitude");

    std::vector<const SmoothBump*> live;
    for (const SmoothBump& b : bumps_)
        if (b.amplitude > 0.0) live.push_back(&b);

    std::vector<Vec> boundary;
    double rmax = 0.0;
    for (const SmoothBump* b : live) {
        rmax = std::max(rmax, b->radius);
        const int count = n == 1 ? 2 : n == 2 ? kCirclePoints : kSpherePoints;
        for (const Vec& dir : sphere_directions(n, count)) boundary.push_back(b->center + b->radius * dir);
    }
    hull_ = ConvexPolytope::hull_of(n, boundary);
    if (n == 1) {
        hull_tol_ = 1e-6;
    } else if (n == 2) {
        hull_tol_ = rmax * (1.0 - std::cos(kPi / kCirclePoints)) + 1e-6;
    } else {
        // Support-function gap measured over a direction set much finer
        // than the one used to build the hull.
        double gap = 0.0;
        for (const Vec& nu : sphere_directions(3, 8192)) {
            double h = -1e300;
            for (const SmoothBump* b : live) h = std::max(h, b->center.dot(nu) + b->radius);
            gap = std::max(gap, h - hull_.support(nu));
        }
        hull_tol_ = gap + 1e-6;
    }

    diameter_ = 0.0;
    for (const SmoothBump* a : live)
        for (const SmoothBump* b : live)
            diameter_ = std::max(diameter_, (a->center - b->center).norm() + a->radius + b->radius);

    const SmoothBump* largest = live.front();
    for (const SmoothBump* b : live)
        if (b->radius > largest->radius) largest = b;
    inradius_ = largest->radius;
    incenter_ = largest->center;

    bump_mass_.clear();
    mass_ = 0.0;
    centroid_ = Vec::Zero();
    for (const SmoothBump& b : bumps_) {
        const double m = b.amplitude * std::pow(b.radius, n) * sphere_area(n) * bump_profile_moment(n);
        bump_mass_.push_back(m);
        mass_ += m;
        centroid_ += m * b.center;
    }
    centroid_ /= mass_;

    // Mass inside B_{rho_f / 2}(i_f), by polar rules centred at i_f.
    std::vector<RadialNode> radial;
    std::vector<SphereNode> sphere;
    const PolarOrders orders;
    const double half = 0.5 * inradius_;
    inscribed_mass_ = 0.0;
    for (const SmoothBump& b : bumps_) {
        if (b.amplitude == 0.0) continue;
        radial_nodes((b.center - incenter_).norm(), b.radius, half, orders.radial, radial);
        for (const RadialNode& rn : radial) {
            cap_nodes(n, incenter_, b.center, b.radius, rn.rho, orders, sphere);
            double ang = 0.0;
            for (const SphereNode& sn : sphere) ang += sn.w * bump_jet(b, incenter_ + rn.rho * sn.theta).h0;
            inscribed_mass_ += rn.w * std::pow(rn.rho, n - 1) * ang;
        }
    }
}

InitialDatum InitialDatum::from_json(const nlohmann::json& j)
{
    require(j.is_object(), "datum must be a JSON object");
    const int n = j.at("dimension").get<int>();
    check_dimension(n);
    const auto& arr = j.at("bumps");
    require(arr.is_array() && !arr.empty(), "datum needs a non-empty bump list");
    std::vector<SmoothBump> bumps;
    for (const auto& b : arr) bumps.push_back(parse_bump(b, n));
    return InitialDatum(n, std::move(bumps));
}

nlohmann::json InitialDatum::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const SmoothBump& b : bumps_) {
        std::vector<double> c(b.center.data(), b.center.data() + n_);
        arr.push_back({{"center", c}, {"radius", b.radius}, {"amplitude", b.amplitude}});
    }
    return {{"dimension", n_}, {"bumps", arr}};
}

InitialDatum InitialDatum::scaled(double factor) const
{
    auto b = bumps_;
    for (SmoothBump& x : b) x.amplitude *= factor;
    return InitialDatum(n_, std::move(b));
}

InitialDatum InitialDatum::translated(const Vec& shift) const
{
    auto b = bumps_;
    for (SmoothBump& x : b) x.center += truncate(shift, n_);
    return InitialDatum(n_, std::move(b));
}

double eval_f(const InitialDatum& datum, const Vec& x)
{
    double s = 0.0;
    for (const SmoothBump& b : datum.bumps()) s += bump_jet(b, truncate(x, datum.dimension())).h0;
    return s;
}

Vec eval_grad_f(const InitialDatum& datum, const Vec& x)
{
    Vec g = Vec::Zero();
    for (const SmoothBump& b : datum.bumps()) g += bump_jet(b, truncate(x, datum.dimension())).gradient();
    return truncate(g, datum.dimension());
}

Mat eval_hessian_f(const InitialDatum& datum, const Vec& x)
{
    Mat h = Mat::Zero();
    const int n = datum.dimension();
    for (const SmoothBump& b : datum.bumps()) {
        const BumpJet j = bump_jet(b, truncate(x, n));
        if (j.h0 != 0.0) h += j.hessian();
    }
    return h;
}

double integrate_f(const InitialDatum& datum, const std::function<double(const Vec&)>& weight, int order)
{
    require(order >= 2, "quadrature order must be at least 2");
    const int n = datum.dimension();
    const double coarse = polar_integral(datum.bumps(), n, weight, order);
    const double fine = polar_integral(datum.bumps(), n, weight, 2 * order);
    const double scale =
        std::max(std::abs(fine), polar_integral(datum.bumps(), n, [&](const Vec& y) { return std::abs(weight(y)); },
                                                2 * order));
    if (std::abs(fine - coarse) > 1e-6 * scale)
        throw ConvergenceError("integrate_f: refinement changed the value by " +
                               std::to_string(std::abs(fine - coarse) / scale) + " relative");
    return fine;
}

double sobolev_sup_estimate(const InitialDatum& datum, int order)
{
    require(order >= 0 && order <= 4, "Sobolev order must be between 0 and 4");
    const int n = datum.dimension();
    const int per_axis = n == 1 ? 4001 : n == 2 ? 201 : 41;
    double value_max = 0.0, deriv_max = 0.0;
    auto sample = [&](const Vec& y) {
        value_max = std::max(value_max, eval_f(datum, y));
        if (order == 0) return;
        const Vec g = eval_grad_f(datum, y);
        deriv_max = std::max(deriv_max, g.cwiseAbs().maxCoeff());
        if (order == 1) return;
        const Mat H = eval_hessian_f(datum, y);
        deriv_max = std::max(deriv_max, H.topLeftCorner(n, n).cwiseAbs().maxCoeff());
        if (order == 2) return;
        // Orders three and four by central differences of the analytic Hessian.
        double scale = 1e300;
        for (const SmoothBump& b : datum.bumps()) scale = std::min(scale, b.radius);
        const double h = 1e-3 * scale;
        for (int k = 0; k < n; ++k) {
            const Vec e = h * Vec::Unit(k);
            const Mat Hp = eval_hessian_f(datum, y + e), Hm = eval_hessian_f(datum, y - e);
            deriv_max = std::max(deriv_max, ((Hp - Hm) / (2 * h)).topLeftCorner(n, n).cwiseAbs().maxCoeff());
            if (order < 4) continue;
            for (int l = 0; l < n; ++l) {
                const Vec f = h * Vec::Unit(l);
                const Mat D = (eval_hessian_f(datum, y + e + f) - eval_hessian_f(datum, y + e - f) -
                               eval_hessian_f(datum, y - e + f) + eval_hessian_f(datum, y - e - f)) /
                              (4 * h * h);
                deriv_max = std::max(deriv_max, D.topLeftCorner(n, n).cwiseAbs().maxCoeff());
            }
        }
    };
    for (const SmoothBump& b : datum.bumps()) {
        if (b.amplitude == 0.0) continue;
        sample(b.center);
        const double step = 2.0 * b.radius / (per_axis - 1);
        const int ny = n >= 2 ? per_axis : 1, nz = n >= 3 ? per_axis : 1;
        for (int i = 0; i < per_axis; ++i)
            for (int j = 0; j < ny; ++j)
                for (int k = 0; k < nz; ++k) {
                    Vec y = b.center;
                    y[0] += -b.radius + i * step;
                    if (n >= 2) y[1] += -b.radius + j * step;
                    if (n >= 3) y[2] += -b.radius + k * step;
                    if ((y - b.center).norm() < b.radius) sample(y);
                }
    }
    // Sampled derivative maxima are inflated; the value maximum is taken as is.
    return std::max(value_max, 1.1 * deriv_max);
}

}  // namespace dws
