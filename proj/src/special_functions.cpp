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

#include "dws/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dws/types.hpp"

namespace dws
{
namespace
{
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Above this argument the power series is summed in log space so that
// individual terms never overflow.
constexpr double kLogSpaceSeries = 600.0;

void check_order(int ell)
{
    require(ell >= 0, "kernel order must be non-negative");
    require(ell <= kMaxKernelOrder, "kernel order exceeds the supported maximum");
}

double bessel_switch(int ell) { return std::max(kBesselSeriesSwitch, double(ell) * ell); }
double even_switch(int ell) { return std::max(kEvenKernelSeriesSwitch, double(ell) * ell); }

// e^-s sum_j (s/2)^(ell+2j) / (j! (j+ell)!)
double bessel_series_scaled(int ell, double s)
{
    if (s == 0.0) return ell == 0 ? 1.0 : 0.0;
    if (s < kLogSpaceSeries) {
        double term = std::pow(0.5 * s, ell) / std::tgamma(ell + 1.0);
        double sum = term;
        const double q = 0.25 * s * s;
        for (int j = 1; j < 100000; ++j) {
            term *= q / (double(j) * (j + ell));
            sum += term;
            if (term < kEps * 0.25 * sum) break;
        }
        return sum * std::exp(-s);
    }
    // Terms peak near j = s/2; accumulate relative to the peak.
    const double ls = std::log(0.5 * s);
    auto log_term = [&](int j) {
        return (ell + 2.0 * j) * ls - std::lgamma(j + 1.0) - std::lgamma(j + ell + 1.0) - s;
    };
    const int peak = std::max(0, int(0.5 * (std::sqrt(double(ell) * ell + s * s) - ell)));
    const double lpeak = log_term(peak);
    double sum = 0.0;
    for (int j = peak; j < peak + 100000; ++j) {
        const double w = std::exp(log_term(j) - lpeak);
        sum += w;
        if (w < kEps * 0.25 * sum) break;
    }
    for (int j = peak - 1; j >= 0; --j) {
        const double w = std::exp(log_term(j) - lpeak);
        sum += w;
        if (w < kEps * 0.25 * sum) break;
    }
    return sum * std::exp(lpeak);
}

// Terms b_i / s^i of the large-s expansion sqrt(2 pi s) e^-s I_m(s) with
// the stopping index chosen jointly for orders m and m + 1.
struct AsymptoticPair
{
    double lower = 0.0;  // A_m
    double upper = 0.0;  // A_{m+1}
    double diff = 0.0;   // A_{m+1} - A_m, summed term by term
};

AsymptoticPair bessel_asymptotic_pair(int m, double s)
{
    AsymptoticPair out{1.0, 1.0, 0.0};
    double a = 1.0, b = 1.0;
    const double mu_a = 4.0 * m * m, mu_b = 4.0 * (m + 1.0) * (m + 1.0);
    for (int i = 1; i < 10000; ++i) {
        const double odd = (2.0 * i - 1.0) * (2.0 * i - 1.0);
        const double ra = -(mu_a - odd) / (8.0 * i * s);
        const double rb = -(mu_b - odd) / (8.0 * i * s);
        // Optimal truncation: stop once either series starts to grow.
        if (i > 1 && (std::abs(ra) > 1.0 || std::abs(rb) > 1.0)) break;
        a *= ra;
        b *= rb;
        out.lower += a;
        out.upper += b;
        out.diff += b - a;
        if (std::abs(a) < kEps * 1e-2 && std::abs(b) < kEps * 1e-2) break;
    }
    return out;
}

// Same for the even family, sum_i c_i / s^i with a terminating series.
AsymptoticPair even_asymptotic_pair(int m, double s)
{
    AsymptoticPair out{1.0, 1.0, 0.0};
    double a = 1.0, b = 1.0;
    for (int i = 1; i <= m + 1; ++i) {
        a *= -double(m - i) * (m + i - 1) / (2.0 * i * s);
        b *= -double(m + 1 - i) * (m + i) / (2.0 * i * s);
        out.lower += a;
        out.upper += b;
        out.diff += b - a;
    }
    return out;
}

double even_series_scaled(int ell, double s)
{
    if (s == 0.0) return 0.0;
    // First term s / (2 ell)!!.
    double term = s;
    for (int k = 2; k <= 2 * ell; k += 2) term /= k;
    double sum = term;
    const double q = s * s;
    for (int j = 0; j < 100000; ++j) {
        term *= q / ((2.0 * (j + ell) + 2.0) * (2.0 * j + 3.0));
        sum += term;
        if (term < kEps * 0.25 * sum) break;
    }
    return sum * std::exp(-s);
}

}  // namespace

double bessel_i_scaled(int ell, double s)
{
    check_order(ell);
    require(s >= 0.0, "Bessel argument must be non-negative");
    if (s <= bessel_switch(ell)) return bessel_series_scaled(ell, s);
    return bessel_asymptotic_pair(ell, s).lower / std::sqrt(2.0 * kPi * s);
}

double bessel_i(int ell, double s) { return bessel_i_scaled(ell, s) * std::exp(s); }

double bessel_i_asymptotic_scaled(int ell, double s, int corrections)
{
    check_order(ell);
    require(s > 0.0, "asymptotic expansion needs a positive argument");
    require(corrections >= 0, "correction count must be non-negative");
    const double mu = 4.0 * ell * ell;
    double term = 1.0, sum = 1.0;
    for (int i = 1; i <= corrections; ++i) {
        term *= -(mu - (2.0 * i - 1.0) * (2.0 * i - 1.0)) / (8.0 * i * s);
        sum += term;
    }
    return sum / std::sqrt(2.0 * kPi * s);
}

double kernel_k_scaled(KernelFamily family, double s)
{
    check_order(family.ell);
    require(s >= 0.0, "kernel argument must be non-negative");
    const int ell = family.ell;
    if (family.parity == Parity::odd) {
        if (s < kKernelSmallArgument) {
            double term = 1.0;
            for (int k = 1; k <= ell; ++k) term /= 2.0 * k;
            double sum = term;
            const double q = 0.25 * s * s;
            for (int j = 1; j < 8; ++j) {
                term *= q / (double(j) * (j + ell));
                sum += term;
            }
            return sum * std::exp(-s);
        }
        return bessel_i_scaled(ell, s) / std::pow(s, ell);
    }
    if (s <= even_switch(ell)) return even_series_scaled(ell, s);
    return even_asymptotic_pair(ell, s).lower / (2.0 * std::pow(s, ell));
}

double kernel_k(KernelFamily family, double s) { return kernel_k_scaled(family, s) * std::exp(s); }

double kernel_k_at_zero(KernelFamily family)
{
    check_order(family.ell);
    if (family.parity == Parity::even) return 0.0;
    double v = 1.0;
    for (int k = 1; k <= family.ell; ++k) v /= 2.0 * k;
    return v;
}

double kernel_k_derivative_at_zero(KernelFamily family)
{
    check_order(family.ell);
    if (family.parity == Parity::odd) return 0.0;
    double v = 1.0;
    for (int k = 1; k <= family.ell; ++k) v /= 2.0 * k;
    return v;
}

double kernel_ktilde_scaled(KernelFamily family, double r, double t)
{
    check_order(family.ell + 1);
    require(t > 0.0, "time must be positive");
    require(r >= 0.0 && r <= t, "kernel radius must satisfy 0 <= r <= t");
    const int ell = family.ell;
    const double s = 0.5 * std::sqrt((t - r) * (t + r));
    const double envelope = std::exp(-r * r / (2.0 * (t + 2.0 * s)));

    const bool odd = family.parity == Parity::odd;
    const double sw = odd ? bessel_switch(ell + 1) : even_switch(ell + 1);
    if (s <= sw) {
        const KernelFamily up{family.parity, ell + 1};
        return envelope * (t * kernel_k_scaled(up, s) - 2.0 * kernel_k_scaled(family, s));
    }
    // t k_{l+1} and 2 k_l agree to leading order here; combine their
    // expansions before multiplying out so the cancellation is exact.
    const AsymptoticPair p = odd ? bessel_asymptotic_pair(ell, s) : even_asymptotic_pair(ell, s);
    const double delta = r * r / ((t + 2.0 * s) * s);
    const double pref = odd ? 1.0 / (std::pow(s, ell) * std::sqrt(2.0 * kPi * s)) : 0.5 / std::pow(s, ell);
    return envelope * pref * (delta * p.upper + 2.0 * p.diff);
}

double ktilde_expansion_prefactor(KernelFamily family, double r, double t)
{
    check_order(family.ell);
    require(t > 0.0, "time must be positive");
    require(r >= 0.0 && r <= t, "kernel radius must satisfy 0 <= r <= t");
    const double ell = family.ell;
    const double envelope = std::exp(-r * r / (2.0 * (t + std::sqrt((t - r) * (t + r)))));
    if (family.parity == Parity::odd)
        return std::pow(2.0, ell + 1.0) / (std::sqrt(kPi) * std::pow(t, ell + 0.5)) * envelope;
    return std::pow(2.0 / t, ell) * envelope;
}

double ktilde_expansion_sqrt(KernelFamily family, double r, double t)
{
    const double pre = ktilde_expansion_prefactor(family, r, t);
    const double l = family.ell;
    const double q = r / t;
    double bracket = 0.0;
    if (family.parity == Parity::odd) {
        bracket = -(2 * l + 1) / t + 0.5 * q * q + (l + 2) / 4.0 * q * q * q * q
                - 3 * (2 * l + 1) * (2 * l + 3) * r * r / (8 * t * t * t)
                + (2 * l - 1) * (2 * l + 1) * (2 * l + 3) / (4 * t * t);
    } else {
        bracket = -2 * l / t + 0.5 * q * q + (2 * l + 3) / 8.0 * q * q * q * q
                - 3 * l * (l + 1) * r * r / (2 * t * t * t) + 2 * l * (l - 1) * (l + 1) / (t * t);
    }
    return pre * bracket;
}

double ktilde_expansion_smallo(KernelFamily family, double r, double t)
{
    const double pre = ktilde_expansion_prefactor(family, r, t);
    const double l = family.ell;
    const double q = r / t;
    const double lead = family.parity == Parity::odd ? -(2 * l + 1) / t : -2 * l / t;
    return pre * (lead + 0.5 * q * q);
}

double ktilde_leading_order(KernelFamily family, double t)
{
    check_order(family.ell);
    require(t > 0.0, "time must be positive");
    const double l = family.ell;
    if (family.parity == Parity::odd)
        return -(2 * l + 1) * std::pow(2.0, l + 1) / (std::sqrt(kPi) * std::pow(t, l + 1.5));
    return -l * std::pow(2.0, l + 1) / std::pow(t, l + 1);
}

}  // namespace dws
