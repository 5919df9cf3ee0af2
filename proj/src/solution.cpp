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


#include "dws/solution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dws
{
namespace
{
double unit_sphere_area(int dim_minus_one)
{
    const double k = dim_minus_one + 1.0;
    return 2.0 * std::pow(kPi, 0.5 * k) / std::tgamma(0.5 * k);
}

// Angular moments of one bump over the part of S^{n-1} seen from x at radius rho.
struct Moments
{
    double m0 = 0.0;           // f
    Vec m1 = Vec::Zero();      // f theta
    double r0 = 0.0;           // theta . grad f
    Vec mg = Vec::Zero();      // grad f
    Vec rh = Vec::Zero();      // Hess f theta
    std::vector<double> m2;    // f (omega . theta)^2
    std::vector<double> mgo;   // (omega . grad f)(omega . theta)
    std::vector<double> mhh;   // omega^T Hess f omega
    std::vector<double> r3;    // d^3 f [omega, omega, theta]

    explicit Moments(std::size_t dirs) : m2(dirs, 0.0), mgo(dirs, 0.0), mhh(dirs, 0.0), r3(dirs, 0.0) {}
};

struct MomentFlags
{
    bool first = false;     // m1
    bool wave = false;      // r0 (and mg/rh with gradient, mhh/r3 with directions)
    bool gradient = false;
    bool directions = false;
    bool mixed = false;     // mgo
};

void accumulate(const SmoothBump& b, const Vec& x, double rho, const std::vector<SphereNode>& nodes,
                const std::vector<Vec>& dirs, const MomentFlags& fl, Moments& m)
{
    for (const SphereNode& sn : nodes) {
        const Vec y = x + rho * sn.theta;
        const BumpJet J = bump_jet(b, y);
        if (J.h0 == 0.0) continue;
        const double w = sn.w;
        const double f = J.h0;
        m.m0 += w * f;
        if (fl.first) m.m1 += w * f * sn.theta;
        Vec g = Vec::Zero();
        if (fl.wave || fl.mixed) g = J.gradient();
        if (fl.wave) m.r0 += w * sn.theta.dot(g);
        Mat H;
        if (fl.wave && (fl.gradient || fl.directions)) H = J.hessian();
        if (fl.wave && fl.gradient) {
            m.mg += w * g;
            m.rh += w * (H * sn.theta);
        }
        if (!fl.directions) continue;
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            const Vec& om = dirs[k];
            const double ot = om.dot(sn.theta);
            m.m2[k] += w * f * ot * ot;
            if (fl.mixed) m.mgo[k] += w * om.dot(g) * ot;
            if (fl.wave) {
                m.mhh[k] += w * om.dot(H * om);
                m.r3[k] += w * J.third(om, om, sn.theta);
            }
        }
    }
}

}  // namespace

DimensionConstants DimensionConstants::of(int n)
{
    require(n >= 1, "dimension must be positive");
    DimensionConstants k;
    k.n = n;
    if (n % 2 == 1) {
        k.gamma = std::pow(2.0, -(3.0 * n - 1.0) / 2.0) * std::pow(kPi, -(n - 1.0) / 2.0);
        k.c = k.gamma * std::pow(2.0, n - 1.0);
        k.family = {Parity::odd, (n - 1) / 2};
    } else {
        k.gamma = std::pow(2.0, -(3.0 * n - 2.0) / 2.0) * std::pow(kPi, -n / 2.0);
        k.c = k.gamma * std::pow(2.0, n - 2.0);
        k.family = {Parity::even, n / 2};
    }
    return k;
}

SolutionEvaluator::SolutionEvaluator(const InitialDatum& datum, EvalOptions options)
    : datum_(datum), options_(options), k_(DimensionConstants::of(datum.dimension()))
{
}

FieldSample SolutionEvaluator::pass(const Vec& x_in, double t, const EvalRequest& request,
                                    const PolarOrders& orders, std::vector<double>* scales) const
{
    const int n = k_.n;
    const Vec x = truncate(x_in, n);
    const KernelFamily f0 = k_.family;
    const KernelFamily f1{f0.parity, f0.ell + 1};
    const KernelFamily f2{f0.parity, f0.ell + 2};
    const bool odd = f0.parity == Parity::odd;
    std::vector<Vec> dirs;
    for (const Vec& om : request.directions) {
        const Vec u = truncate(om, n);
        require(std::abs(u.norm() - 1.0) < 1e-9, "direction must be a unit vector");
        dirs.push_back(u);
    }
    const std::size_t nd = dirs.size();
    const bool want_g = request.gradient;
    const bool want_d = nd > 0;

    MomentFlags radial_flags;
    radial_flags.first = want_g || (!odd && want_d);
    radial_flags.wave = !odd;
    radial_flags.gradient = want_g;
    radial_flags.directions = want_d;
    radial_flags.mixed = !odd && want_d;

    MomentFlags sphere_flags;
    sphere_flags.first = want_g;
    sphere_flags.wave = true;
    sphere_flags.gradient = want_g;
    sphere_flags.directions = want_d;
    sphere_flags.mixed = want_d;

    double P = 0.0, Pabs = 0.0;
    Vec PG = Vec::Zero();
    double PGabs = 0.0;
    std::vector<double> PD(nd, 0.0), PDabs(nd, 0.0);
    // Singular-weight integrals (even n).
    Vec SG = Vec::Zero();
    std::vector<double> SDa(nd, 0.0), SDb(nd, 0.0);
    double S0 = 0.0, S1 = 0.0;
    Vec SG0 = Vec::Zero(), SG1 = Vec::Zero();
    std::vector<double> SD0(nd, 0.0), SD1(nd, 0.0);
    // Sphere moments at rho = t (odd n).
    Moments Mt(nd);

    std::vector<RadialNode> radial;
    std::vector<SphereNode> sphere;
    for (const SmoothBump& b : datum_.bumps()) {
        if (b.amplitude == 0.0) continue;
        const double D = (b.center - x).norm();
        radial_nodes(D, b.radius, t, orders.radial, radial);
        for (const RadialNode& rn : radial) {
            const double rho = rn.rho;
            const double rp = std::pow(rho, n - 1);
            const double K0 = kernel_ktilde_scaled(f0, rho, t);
            const double K1 = (want_g || want_d) ? kernel_ktilde_scaled(f1, rho, t) : 0.0;
            const double K2 = want_d ? kernel_ktilde_scaled(f2, rho, t) : 0.0;
            cap_nodes(n, x, b.center, b.radius, rho, orders, sphere);
            Moments m(nd);
            accumulate(b, x, rho, sphere, dirs, radial_flags, m);
            P += rn.w * rp * K0 * m.m0;
            Pabs += rn.w * rp * std::abs(K0) * m.m0;
            if (want_g) {
                PG += rn.w * rp * rho * K1 * m.m1;
                PGabs += rn.w * rp * rho * std::abs(K1) * m.m0;
            }
            for (std::size_t k = 0; k < nd; ++k) {
                PD[k] += rn.w * rp * (K2 * rho * rho * m.m2[k] - 4.0 * K1 * m.m0);
                PDabs[k] += rn.w * rp * (std::abs(K2) * rho * rho + 4.0 * std::abs(K1)) * m.m0;
            }
            if (odd) continue;
            const double ws = rn.w_sing;
            const double rn_pow = rp * rho;
            if (want_g) SG += ws * rn_pow * m.m1;
            for (std::size_t k = 0; k < nd; ++k) {
                SDa[k] += ws * rn_pow * m.mgo[k];
                SDb[k] += ws * rn_pow * rho * m.m2[k];
            }
            S0 += ws * rho * m.m0;
            S1 += ws * rho * rho * m.r0;
            if (want_g) {
                SG0 += ws * rho * m.mg;
                SG1 += ws * rho * rho * m.rh;
            }
            for (std::size_t k = 0; k < nd; ++k) {
                SD0[k] += ws * rho * m.mhh[k];
                SD1[k] += ws * rho * rho * m.r3[k];
            }
        }
        if (odd && D - b.radius < t && t < D + b.radius) {
            cap_nodes(n, x, b.center, b.radius, t, orders, sphere);
            accumulate(b, x, t, sphere, dirs, sphere_flags, Mt);
        }
    }

    const double g = k_.gamma, c = k_.c;
    const double damp = std::exp(-0.5 * t);
    FieldSample out;
    out.x = x;
    out.t = t;

    // Wave part applied to a generic (sphere mean, its radial derivative)
    // pair (odd n) or (ball integral, radial-derivative integral) pair (n = 2).
    auto wave_odd = [&](double M, double Mr) {
        const double hat = g * kernel_k_at_zero(f0) * std::pow(t, n - 1) * M;
        if (n == 1) return hat;
        // n = 3: W = c t M.
        return hat - 0.5 * c * t * M + c * (M + t * Mr);
    };
    auto wave_odd_vec = [&](const Vec& M, const Vec& Mr) {
        const Vec hat = g * kernel_k_at_zero(f0) * std::pow(t, n - 1) * M;
        if (n == 1) return hat;
        return Vec(hat - 0.5 * c * t * M + c * (M + t * Mr));
    };
    auto wave_even = [&](double A0, double A1) {
        return 0.25 * g * t * A0 - c * A0 + 2.0 * c * A0 / t + 2.0 * c * A1 / t;
    };

    out.principal = 0.25 * g * P;
    out.wave_unscaled = odd ? wave_odd(Mt.m0, Mt.r0) : wave_even(S0, S1);
    out.wave_remainder = damp * out.wave_unscaled;
    out.value = out.principal + out.wave_remainder;

    std::vector<double> local_scales;
    local_scales.push_back(0.25 * g * Pabs + std::abs(out.wave_remainder));

    if (want_g) {
        const Vec gp = truncate(g / 16.0 * PG, n);
        Vec rem;
        if (odd) {
            const double bc = t * kernel_k_at_zero(f1) - 2.0 * kernel_k_at_zero(f0);
            rem = 0.25 * g * bc * std::pow(t, n - 1) * Mt.m1 + wave_odd_vec(Mt.mg, Mt.rh);
        } else {
            const double bc = t * kernel_k_derivative_at_zero(f1) - 2.0 * kernel_k_derivative_at_zero(f0);
            rem = g / 8.0 * bc * SG + (0.25 * g * t - c + 2.0 * c / t) * SG0 + 2.0 * c / t * SG1;
        }
        rem = truncate(rem, n);
        out.grad_principal = gp;
        out.grad_remainder_unscaled = rem;
        out.gradient = Vec(gp + damp * rem);
        local_scales.push_back(g / 16.0 * PGabs + damp * rem.norm());
    }
    for (std::size_t k = 0; k < nd; ++k) {
        const double dp = g / 64.0 * PD[k];
        double rem = 0.0;
        if (odd) {
            const double b1 = t * kernel_k_at_zero(f1) - 2.0 * kernel_k_at_zero(f0);
            const double b2 = t * kernel_k_at_zero(f2) - 2.0 * kernel_k_at_zero(f1);
            rem = 0.25 * g * b1 * std::pow(t, n - 1) * Mt.mgo[k] + g / 16.0 * b2 * std::pow(t, n) * Mt.m2[k] +
                  wave_odd(Mt.mhh[k], Mt.r3[k]);
        } else {
            const double b1 = t * kernel_k_derivative_at_zero(f1) - 2.0 * kernel_k_derivative_at_zero(f0);
            const double b2 = t * kernel_k_derivative_at_zero(f2) - 2.0 * kernel_k_derivative_at_zero(f1);
            rem = g / 8.0 * b1 * SDa[k] + g / 32.0 * b2 * SDb[k] + wave_even(SD0[k], SD1[k]);
        }
        out.dir2.push_back({dirs[k], dp + damp * rem, dp});
        local_scales.push_back(g / 64.0 * PDabs[k] + damp * std::abs(rem));
    }
    if (scales) *scales = std::move(local_scales);
    return out;
}

FieldSample SolutionEvaluator::evaluate(const Vec& x, double t, const EvalRequest& request) const
{
    require(t > 0.0 && std::isfinite(t), "time must be positive");
    if (!options_.check_refinement) return pass(x, t, request, options_.orders, nullptr);
    std::vector<double> scales;
    const FieldSample coarse = pass(x, t, request, options_.orders, nullptr);
    FieldSample fine = pass(x, t, request, options_.orders.doubled(), &scales);
    const double tol = options_.refinement_tol;
    auto fail = [&](const char* what, double diff, double scale) {
        throw ConvergenceError(std::string("solution quadrature did not settle for ") + what + ": change " +
                               std::to_string(diff) + " against scale " + std::to_string(scale));
    };
    std::size_t s = 0;
    const double dv = std::abs(fine.value - coarse.value);
    if (dv > tol * scales[s]) fail("u", dv, scales[s]);
    ++s;
    if (request.gradient) {
        const double dg = (*fine.gradient - *coarse.gradient).norm();
        if (dg > tol * scales[s]) fail("grad u", dg, scales[s]);
        ++s;
    }
    for (std::size_t k = 0; k < fine.dir2.size(); ++k, ++s) {
        const double dd = std::abs(fine.dir2[k].value - coarse.dir2[k].value);
        if (dd > tol * scales[s]) fail("second directional derivative", dd, scales[s]);
    }
    return fine;
}

Vec SolutionEvaluator::gradient(const Vec& x, double t) const
{
    EvalRequest r;
    r.gradient = true;
    return *evaluate(x, t, r).gradient;
}

double SolutionEvaluator::dir2(const Vec& x, double t, const Vec& omega) const
{
    EvalRequest r;
    r.directions = {omega};
    return evaluate(x, t, r).dir2.front().value;
}

FieldSample eval_u(const InitialDatum& datum, const Vec& x, double t, const EvalOptions& options)
{
    return SolutionEvaluator(datum, options).evaluate(x, t);
}

Vec eval_grad_u(const InitialDatum& datum, const Vec& x, double t, const EvalOptions& options)
{
    return SolutionEvaluator(datum, options).gradient(x, t);
}

double eval_dir2_u(const InitialDatum& datum, const Vec& x, double t, const Vec& omega, const EvalOptions& options)
{
    return SolutionEvaluator(datum, options).dir2(x, t, omega);
}

double eval_principal_general_n(int n, const std::vector<RadialBump>& bumps, double distance, double t, int order)
{
    require(n >= 1, "dimension must be positive");
    require(!bumps.empty(), "need at least one bump");
    require(n <= 3 || bumps.size() == 1, "general-dimension evaluation supports a single radial bump");
    require(t > 0.0, "time must be positive");
    require(distance >= 0.0, "distance must be non-negative");
    const DimensionConstants k = DimensionConstants::of(n);
    const GaussRule& gl = gauss_legendre(order);
    std::vector<RadialNode> radial;
    double sum = 0.0;
    for (const RadialBump& rb : bumps) {
        require(rb.radius > 0.0 && rb.amplitude >= 0.0, "invalid radial bump");
        const SmoothBump b{Vec::Zero(), rb.radius, rb.amplitude};
        auto prof = [&](double dist2) { return bump_jet(b, Vec(std::sqrt(std::max(0.0, dist2)), 0, 0)).h0; };
        const double D = distance;
        radial_nodes(D, rb.radius, t, order, radial);
        for (const RadialNode& rn : radial) {
            const double rho = rn.rho;
            double ang = 0.0;
            if (n == 1) {
                ang = prof((rho - D) * (rho - D)) + prof((rho + D) * (rho + D));
            } else if (D == 0.0) {
                ang = unit_sphere_area(n - 1) * prof(rho * rho);
            } else {
                // theta at polar angle alpha from the direction to the centre.
                double amax = kPi;
                const double kappa = (rho * rho + D * D - rb.radius * rb.radius) / (2.0 * rho * D);
                if (kappa >= 1.0) continue;
                if (kappa > -1.0) amax = std::acos(kappa);
                for (int i = 0; i < order; ++i) {
                    const double a = 0.5 * amax * (gl.nodes[i] + 1.0);
                    const double w = 0.5 * amax * gl.weights[i];
                    ang += w * std::pow(std::sin(a), n - 2) * prof(rho * rho + D * D - 2.0 * rho * D * std::cos(a));
                }
                ang *= unit_sphere_area(n - 2);
            }
            sum += rn.w * std::pow(rho, n - 1) * kernel_ktilde_scaled(k.family, rho, t) * ang;
        }
    }
    return 0.25 * k.gamma * sum;
}

double heat_eval(const InitialDatum& datum, const Vec& x_in, double t, const PolarOrders& orders)
{
    require(t > 0.0, "time must be positive");
    const int n = datum.dimension();
    const Vec x = truncate(x_in, n);
    const double norm = std::pow(4.0 * kPi * t, -0.5 * n);
    // Beyond 12 sqrt(t) the Gaussian is below e^-36 of its peak.
    const double reach = 12.0 * std::sqrt(t);
    std::vector<RadialNode> radial;
    std::vector<SphereNode> sphere;
    double sum = 0.0;
    for (const SmoothBump& b : datum.bumps()) {
        if (b.amplitude == 0.0) continue;
        const double D = (b.center - x).norm();
        radial_nodes(D, b.radius, std::min(reach, D + b.radius), orders.radial, radial);
        for (const RadialNode& rn : radial) {
            cap_nodes(n, x, b.center, b.radius, rn.rho, orders, sphere);
            double ang = 0.0;
            for (const SphereNode& sn : sphere) ang += sn.w * bump_jet(b, x + rn.rho * sn.theta).h0;
            sum += rn.w * std::pow(rn.rho, n - 1) * std::exp(-rn.rho * rn.rho / (4.0 * t)) * ang;
        }
    }
    return norm * sum;
}

std::vector<DecayRow> error_decay_diagnostic(const InitialDatum& datum, const std::vector<double>& times,
                                             const EvalOptions& options)
{
    for (std::size_t i = 0; i < times.size(); ++i) {
        require(times[i] > 0.0, "times must be positive");
        require(i == 0 || times[i] > times[i - 1], "times must be increasing");
    }
    const int n = datum.dimension();
    const SolutionEvaluator ev(datum, options);
    const auto dirs = sphere_directions(n, n == 1 ? 2 : n == 2 ? 8 : 14);
    EvalRequest req;
    req.gradient = true;
    std::vector<DecayRow> rows;
    for (double t : times) {
        std::vector<double> radii;
        const double reach = t + datum.diameter();
        for (int k = 0; k <= 160; ++k) radii.push_back(reach * k / 160.0);
        for (int k = 0; k <= 40; ++k) radii.push_back(std::max(0.0, t - datum.diameter() + 2.0 * datum.diameter() * k / 40.0));
        DecayRow row;
        row.t = t;
        for (const Vec& nu : dirs)
            for (double r : radii) {
                const FieldSample s = ev.evaluate(datum.centroid() + r * nu, t, req);
                row.value_metric = std::max(row.value_metric, std::abs(s.wave_unscaled));
                row.gradient_metric = std::max(row.gradient_metric, s.grad_remainder_unscaled->norm());
            }
        row.value_metric *= std::pow(1.0 + t, -n);
        row.gradient_metric *= std::pow(1.0 + t, -(n + 1));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dws
