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


#include "dws/reference_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <ostream>

#include <fftw3.h>
#include <fmt/format.h>
#include <fmt/ostream.h>

namespace dws
{
namespace
{
// FFTW's planner is not re-entrant.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

double support_extent(const InitialDatum& datum)
{
    double e = 0.0;
    for (const SmoothBump& b : datum.bumps())
        if (b.amplitude > 0.0) e = std::max(e, b.center.cwiseAbs().maxCoeff() + b.radius);
    return e;
}

}  // namespace

double OracleRun::at(int i, int j, int k) const
{
    const std::size_t p = std::size_t(points);
    const std::size_t idx = n == 1 ? std::size_t(i) : n == 2 ? std::size_t(i) * p + j : (std::size_t(i) * p + j) * p + k;
    return field.at(idx);
}

Vec OracleRun::node(int i, int j, int k) const
{
    Vec x = Vec::Zero();
    x[0] = coordinate(i);
    if (n >= 2) x[1] = coordinate(j);
    if (n >= 3) x[2] = coordinate(k);
    return x;
}

int OracleRun::index_of(double v) const
{
    const int i = int(std::lround((v + half_width) / dx));
    require(i >= 0 && i < points, "coordinate outside the oracle grid");
    return i;
}

double OracleRun::max_abs() const
{
    double m = 0.0;
    for (double v : field) m = std::max(m, std::abs(v));
    return m;
}

OracleRun fd_solve_1d(const InitialDatum& datum, double T, double dx, double dt, double half_width)
{
    require(datum.dimension() == 1, "finite-difference oracle is one-dimensional");
    require(T >= 0.0, "final time must be non-negative");
    require(dx > 0.0 && dt > 0.0, "grid spacings must be positive");
    require(dt <= 0.5 * dx * (1.0 + 1e-12), "time step violates dt <= dx / 2");
    double L = half_width > 0.0 ? half_width : support_extent(datum) + T + 1.0;
    const int half_points = int(std::ceil(L / dx - 1e-9));
    L = half_points * dx;

    OracleRun run;
    run.scheme = OracleScheme::finite_difference_1d;
    run.n = 1;
    run.points = 2 * half_points + 1;
    run.half_width = L;
    run.dx = dx;
    run.T = T;
    run.steps = T > 0.0 ? int(std::ceil(T / dt - 1e-9)) : 0;
    run.dt = run.steps > 0 ? T / run.steps : dt;

    const int N = run.points;
    std::vector<double> prev(N), cur(N), next(N, 0.0);
    for (int i = 0; i < N; ++i) prev[i] = eval_f(datum, run.node(i));
    if (run.steps == 0) {
        run.field = prev;
        return run;
    }
    const double h = run.dt;
    // Second-order start: u_t(0) = -f and u_tt(0) = f'' + f.
    for (int i = 0; i < N; ++i) {
        const Vec x = run.node(i);
        const double f = prev[i];
        cur[i] = f - h * f + 0.5 * h * h * (eval_hessian_f(datum, x)(0, 0) + f);
    }
    cur.front() = cur.back() = 0.0;
    const double lam2 = (h / dx) * (h / dx);
    const double ap = 1.0 + 0.5 * h, am = 1.0 - 0.5 * h;
    for (int s = 1; s < run.steps; ++s) {
        for (int i = 1; i < N - 1; ++i)
            next[i] = (2.0 * cur[i] - am * prev[i] + lam2 * (cur[i + 1] - 2.0 * cur[i] + cur[i - 1])) / ap;
        next.front() = next.back() = 0.0;
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    run.field = cur;
    return run;
}

double mode_evolution(double k2, double t)
{
    const double disc = 1.0 - 4.0 * k2;
    // Near the double root k2 = 1/4 both closed forms lose digits; expand
    // cos(wt) and sin(wt)/w in d = w^2 instead. d = 0 gives (1 - t/2) e^(-t/2).
    const double d = -0.25 * disc, z = d * t * t;
    if (std::abs(z) < 1.0) {
        double c = 1.0, sc = 1.0, tc = 1.0, ts = 1.0;
        for (int j = 1; j < 40 && std::abs(tc) > 1e-18; ++j) {
            tc *= -z / ((2.0 * j - 1.0) * (2.0 * j));
            ts *= -z / ((2.0 * j) * (2.0 * j + 1.0));
            c += tc;
            sc += ts;
        }
        return std::exp(-0.5 * t) * (c - 0.5 * t * sc);
    }
    if (disc > 0.0) {
        const double beta = 0.5 * std::sqrt(disc);
        const double a = 0.5 * (1.0 - 0.5 / beta), b = 0.5 * (1.0 + 0.5 / beta);
        return a * std::exp((beta - 0.5) * t) + b * std::exp((-beta - 0.5) * t);
    }
    const double mu = 0.5 * std::sqrt(-disc);
    return std::exp(-0.5 * t) * (std::cos(mu * t) - std::sin(mu * t) / (2.0 * mu));
}

OracleRun spectral_solve(const InitialDatum& datum, double T, double half_width, int modes)
{
    const int n = datum.dimension();
    require(T >= 0.0, "final time must be non-negative");
    require(half_width > 0.0, "torus half-width must be positive");
    require(modes >= 4 && modes % 2 == 0, "mode count must be even and at least 4");
    constexpr double kMargin = 0.5;
    require(support_extent(datum) + T + kMargin <= half_width,
            "support plus propagation distance wraps around the torus");

    OracleRun run;
    run.scheme = OracleScheme::spectral_torus;
    run.n = n;
    run.points = modes;
    run.half_width = half_width;
    run.dx = 2.0 * half_width / modes;
    run.T = T;

    const std::size_t M = std::size_t(modes);
    const std::size_t total = n == 1 ? M : n == 2 ? M * M : M * M * M;
    const std::size_t last = M / 2 + 1;
    const std::size_t spectral = total / M * last;
    double* real = fftw_alloc_real(total);
    fftw_complex* spec = fftw_alloc_complex(spectral);
    int dims[3] = {modes, modes, modes};
    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd = fftw_plan_dft_r2c(n, dims, real, spec, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r(n, dims, spec, real, FFTW_ESTIMATE);
    }
    for (int i = 0; i < modes; ++i)
        for (int j = 0; j < (n >= 2 ? modes : 1); ++j)
            for (int k = 0; k < (n >= 3 ? modes : 1); ++k) {
                const std::size_t idx = n == 1 ? i : n == 2 ? std::size_t(i) * M + j : (std::size_t(i) * M + j) * M + k;
                real[idx] = eval_f(datum, run.node(i, j, k));
            }
    fftw_execute(fwd);

    const double dk = kPi / half_width;
    auto wave = [&](std::size_t m) { return dk * double(m <= M / 2 ? double(m) : double(m) - double(M)); };
    const std::size_t outer = n == 1 ? 1 : M, middle = n == 3 ? M : 1;
    for (std::size_t a = 0; a < outer; ++a)
        for (std::size_t b = 0; b < middle; ++b)
            for (std::size_t c = 0; c < last; ++c) {
                double k2 = wave(c) * wave(c);
                if (n >= 2) k2 += wave(a) * wave(a);
                if (n == 3) k2 += wave(b) * wave(b);
                const std::size_t idx = (a * middle + b) * last + c;
                const double factor = mode_evolution(k2, T) / double(total);
                spec[idx][0] *= factor;
                spec[idx][1] *= factor;
            }
    fftw_execute(bwd);
    run.field.assign(real, real + total);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    fftw_free(real);
    fftw_free(spec);
    return run;
}

void write_snapshot_csv(const OracleRun& run, std::ostream& out, int stride)
{
    require(stride >= 1, "stride must be positive");
    static const char* axes[3] = {"x", "y", "z"};
    fmt::print(out, "# units: coordinates in length units, u dimensionless; scheme={} T={:.17g}\n",
               run.scheme == OracleScheme::spectral_torus ? "spectral-torus" : "finite-difference-1d", run.T);
    for (int a = 0; a < run.n; ++a) fmt::print(out, "{},", axes[a]);
    fmt::print(out, "u\n");
    const int P = run.points;
    for (int i = 0; i < P; i += stride)
        for (int j = 0; j < (run.n >= 2 ? P : 1); j += stride)
            for (int k = 0; k < (run.n >= 3 ? P : 1); k += stride) {
                const Vec x = run.node(i, j, k);
                for (int a = 0; a < run.n; ++a) fmt::print(out, "{:.17g},", x[a]);
                fmt::print(out, "{:.17g}\n", run.at(i, j, k));
            }
}

}  // namespace dws
