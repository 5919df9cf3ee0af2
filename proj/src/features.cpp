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


#include "dws/features.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/random/sobol.hpp>

namespace dws
{
namespace
{
constexpr int kMaxDescentIterations = 1000;

double envelope_factor(int n)
{
    return n % 2 == 0 ? std::pow(2.0, 0.5 * n) : std::pow(2.0, 0.5 * (n + 1)) / std::sqrt(kPi);
}

RayRoot bisect_ray(const std::function<double(double)>& fn, double lo, double hi, double tol)
{
    RayRoot out;
    out.lo = lo;
    out.hi = hi;
    // An endpoint where the field vanishes identically (outside the light
    // cone at short times) is not a sign change.
    const double flo = fn(lo), fhi = fn(hi);
    if (!(flo < 0.0 && fhi > 0.0) && !(flo > 0.0 && fhi < 0.0)) return out;
    int iterations = 0;
    auto close_enough = [&](double a, double b) {
        ++iterations;
        return std::abs(b - a) <= tol;
    };
    const auto [a, b] = boost::math::tools::bisect(fn, lo, hi, close_enough);
    out.found = true;
    out.rho = 0.5 * (a + b);
    out.iterations = iterations;
    return out;
}

double directional_derivative(const SolutionEvaluator& ev, const Vec& x, double t, const Vec& nu)
{
    return nu.dot(ev.gradient(x, t));
}

// Minimise sign * u from x0; sign = +1 finds minima, -1 maxima.
ColdSpot armijo_descent(const SolutionEvaluator& ev, double t, const Vec& x0, double sign, double fallback_step)
{
    const int n = ev.datum().dimension();
    EvalRequest grad_req;
    grad_req.gradient = true;
    Vec x = truncate(x0, n);
    FieldSample s = ev.evaluate(x, t, grad_req);
    double phi = sign * s.value;
    for (int it = 1; it <= kMaxDescentIterations; ++it) {
        const Vec g = sign * *s.gradient;
        const double gn = g.norm();
        if (gn == 0.0) return {x, s.value, it, false};
        const Vec d = -g / gn;
        const double curv = sign * ev.dir2(x, t, d);
        double alpha = curv > 0.0 ? gn / curv : fallback_step;
        FieldSample trial;
        for (int k = 0; k < 60; ++k) {
            trial = ev.evaluate(x + alpha * d, t, grad_req);
            const double phi_new = sign * trial.value;
            if (phi_new <= phi - 1e-4 * alpha * gn + 1e-14 * std::abs(phi)) break;
            alpha *= 0.5;
        }
        x = truncate(x + alpha * d, n);
        s = trial;
        phi = sign * s.value;
        if (alpha < 1e-11) return {x, s.value, it, false};
    }
    throw ConvergenceError("extremum search did not converge within the iteration cap");
}

// Local maximiser of u near x0. The field around a hot spot is much flatter
// tangentially than radially, so plain gradient steps zigzag; this takes
// Newton steps on the Hessian assembled from directional second derivatives
// and falls back to a gradient step where the Hessian is not negative definite.
ColdSpot hessian_ascent(const SolutionEvaluator& ev, double t, const Vec& x0, double fallback_step)
{
    const int n = ev.datum().dimension();
    EvalRequest req;
    req.gradient = true;
    for (int i = 0; i < n; ++i) req.directions.push_back(Vec::Unit(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) req.directions.push_back((Vec::Unit(i) + Vec::Unit(j)) / std::sqrt(2.0));
    EvalRequest grad_req;
    grad_req.gradient = true;

    Vec x = truncate(x0, n);
    for (int it = 1; it <= kMaxDescentIterations; ++it) {
        const FieldSample s = ev.evaluate(x, t, req);
        const Eigen::VectorXd g = -s.gradient->head(n);
        if (g.norm() == 0.0) return {x, s.value, it, false};
        Eigen::MatrixXd H(n, n);
        for (int i = 0; i < n; ++i) H(i, i) = -s.dir2[i].value;
        for (int i = 0, k = n; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k) H(i, j) = H(j, i) = -s.dir2[k].value - 0.5 * (H(i, i) + H(j, j));
        Eigen::VectorXd p;
        const Eigen::LLT<Eigen::MatrixXd> llt(H);
        if (llt.info() == Eigen::Success) p = -llt.solve(g);
        if (p.size() == 0 || !(g.dot(p) < 0.0)) p = -fallback_step * g / g.norm();

        const double phi = -s.value;
        // Predicted gain below rounding of u: stationary. This also ends the
        // search on degenerate (rotationally symmetric) maxima.
        if (-g.dot(p) <= 1e-16 * std::abs(phi)) return {x, s.value, it, false};
        double alpha = 1.0, value = s.value;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            Vec trial = x;
            trial.head(n) += alpha * p;
            value = ev.evaluate(trial, t, grad_req).value;
            if (-value <= phi + 1e-4 * alpha * g.dot(p)) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) return {x, s.value, it, false};
        const double step = alpha * p.norm();
        x.head(n) += alpha * p;
        if (step < 1e-11 * (1.0 + x.norm())) return {x, value, it, false};
    }
    throw ConvergenceError("extremum search did not converge within the iteration cap");
}

int resolve_directions(int n, int requested) { return requested > 0 ? requested : default_direction_count(n); }

double resolve_psi(int n, double t, const CertifyOptions& o)
{
    return o.psi_factor ? std::sqrt(*o.psi_factor * t) : default_psi(n, t);
}

// Deterministic interior samples of the polytope: its vertices (thinned)
// plus low-discrepancy points of the bounding box that fall inside.
std::vector<Vec> interior_samples(const ConvexPolytope& K, int count, std::uint64_t seed)
{
    const int n = K.dimension();
    std::vector<Vec> pts;
    Vec lo = K.vertices().front(), hi = lo;
    for (const Vec& v : K.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const std::size_t stride = std::max<std::size_t>(1, K.vertices().size() / 16);
    for (std::size_t i = 0; i < K.vertices().size(); i += stride) pts.push_back(K.vertices()[i]);
    boost::random::sobol gen(n);
    gen.discard(std::uint64_t(n) * (1 + 1024 * seed));
    const double scale = 1.0 / (double(gen.max()) + 1.0);
    int accepted = 0;
    for (int tries = 0; accepted < count && tries < 64 * count; ++tries) {
        Vec x = Vec::Zero();
        for (int a = 0; a < n; ++a) x[a] = lo[a] + (hi[a] - lo[a]) * (double(gen()) * scale);
        if (K.contains(x)) {
            pts.push_back(x);
            ++accepted;
        }
    }
    return pts;
}

struct RaySample
{
    Vec x;
    Vec nu;
};

std::vector<RaySample> annulus_samples(const std::vector<NormalPoint>& bundle, double r1, double r2, int m)
{
    std::vector<RaySample> out;
    r1 = std::max(0.0, r1);
    if (!(r2 >= r1)) return out;
    for (const NormalPoint& np : bundle)
        for (int j = 0; j < m; ++j) {
            const double rho = m == 1 ? 0.5 * (r1 + r2) : r1 + (r2 - r1) * j / (m - 1);
            out.push_back({phi_map(np.xi, np.nu, rho), np.nu});
        }
    return out;
}

}  // namespace

int default_direction_count(int n) { return n == 1 ? 2 : n == 2 ? 16 : 26; }

RayRoot trace_null_radius(const SolutionEvaluator& ev, double t, const NormalPoint& np, double tol)
{
    const InitialDatum& d = ev.datum();
    const double R0 = null_reference_radius(d.dimension(), t);
    const double lo = std::max(0.0, R0 - d.diameter() - 1.0), hi = R0 + 1.0;
    return bisect_ray([&](double rho) { return ev.value(phi_map(np.xi, np.nu, rho), t); }, lo, hi, tol);
}

RayRoot find_critical_radius(const SolutionEvaluator& ev, double t, const NormalPoint& np, double tol)
{
    const InitialDatum& d = ev.datum();
    const double Rc = critical_reference_radius(d.dimension(), t);
    const double lo = std::max(0.0, Rc - d.diameter() - 1.0), hi = Rc + 1.0;
    return bisect_ray([&](double rho) { return directional_derivative(ev, phi_map(np.xi, np.nu, rho), t, np.nu); },
                      lo, hi, tol);
}

std::vector<Spot> find_hot_spots(const SolutionEvaluator& ev, double t, const std::vector<NormalPoint>& bundle,
                                 Execution mode)
{
    const InitialDatum& d = ev.datum();
    const int n = d.dimension();
    require(!bundle.empty(), "hot-spot search needs at least one direction");
    const double Rc = critical_reference_radius(n, t);
    const double lo = std::max(0.0, Rc - d.diameter() - 1.0), hi = Rc + 1.0;
    // Ray maxima by Brent's golden-section search on the critical bracket.
    const auto ray_max = parallel_map<Spot>(
        bundle.size(),
        [&](std::size_t i) {
            const NormalPoint& np = bundle[i];
            auto neg = [&](double rho) { return -ev.value(phi_map(np.xi, np.nu, rho), t); };
            const auto [rho, negval] = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
            return Spot{phi_map(np.xi, np.nu, rho), -negval, rho};
        },
        mode);

    // Candidates: discrete local maxima over neighbouring directions (2-D),
    // the top few (3-D), or both rays (1-D).
    std::vector<std::size_t> cand;
    const std::size_t m = ray_max.size();
    if (n == 1) {
        for (std::size_t i = 0; i < m; ++i) cand.push_back(i);
    } else if (n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            const double v = ray_max[i].value;
            if (v >= ray_max[(i + m - 1) % m].value && v >= ray_max[(i + 1) % m].value) cand.push_back(i);
        }
    } else {
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return ray_max[a].value > ray_max[b].value; });
        cand.assign(order.begin(), order.begin() + std::min<std::size_t>(4, m));
    }

    const auto refined = parallel_map<Spot>(
        cand.size(),
        [&](std::size_t k) {
            const Spot& s0 = ray_max[cand[k]];
            const ColdSpot r = hessian_ascent(ev, t, s0.x, 0.05);
            return Spot{r.x, r.value, distance_to_hull(d.hull(), r.x).rho};
        },
        mode);

    std::vector<Spot> out;
    for (const Spot& s : refined) {
        bool dup = false;
        for (const Spot& o : out) dup = dup || (o.x - s.x).norm() < 1e-4;
        if (!dup) out.push_back(s);
    }
    return out;
}

ColdSpot find_cold_spot(const SolutionEvaluator& ev, double t, const Vec& start)
{
    const InitialDatum& d = ev.datum();
    ColdSpot c = armijo_descent(ev, t, start, 1.0, 0.1 * d.inradius());
    c.in_hull = d.hull().contains(c.x, d.hull_tolerance()) || distance_to_hull(d.hull(), c.x).rho <= d.hull_tolerance();
    return c;
}

ColdSpot find_cold_spot(const SolutionEvaluator& ev, double t) { return find_cold_spot(ev, t, ev.datum().centroid()); }

Vec second_cold_start(const InitialDatum& datum)
{
    if ((datum.incenter() - datum.centroid()).norm() > 1e-3) return datum.incenter();
    return datum.centroid() + 0.5 * datum.inradius() * Vec::UnitX();
}

const std::vector<Proposition>& all_propositions()
{
    static const std::vector<Proposition> all = {
        Proposition::negativity_null, Proposition::positivity_null, Proposition::monotonicity_null,
        Proposition::positivity_crit, Proposition::negativity_crit, Proposition::concavity_crit,
        Proposition::lb_cs,           Proposition::ub_a,            Proposition::lb_a,
        Proposition::ub_e,            Proposition::convex};
    return all;
}

std::string proposition_name(Proposition p)
{
    switch (p) {
    case Proposition::negativity_null: return "negativity_null";
    case Proposition::positivity_null: return "positivity_null";
    case Proposition::monotonicity_null: return "monotonicity_null";
    case Proposition::positivity_crit: return "positivity_crit";
    case Proposition::negativity_crit: return "negativity_crit";
    case Proposition::concavity_crit: return "concavity_crit";
    case Proposition::lb_cs: return "lb_CS";
    case Proposition::ub_a: return "ub_A";
    case Proposition::lb_a: return "lb_A";
    case Proposition::ub_e: return "ub_E";
    case Proposition::convex: return "convex";
    }
    return "unknown";
}

std::optional<Proposition> proposition_from_name(const std::string& name)
{
    for (Proposition p : all_propositions())
        if (proposition_name(p) == name) return p;
    return std::nullopt;
}

double envelope_bound(const InitialDatum& datum, double t, Proposition p, double psi)
{
    const int n = datum.dimension();
    const double g = DimensionConstants::of(n).gamma;
    const double q = envelope_factor(n);
    const double m = datum.mass();
    const double tp = std::pow(t, 0.5 * n + 1.0);
    switch (p) {
    case Proposition::lb_cs: return n * g * q / (5.0 * tp) * m;
    case Proposition::ub_a: return 7.0 * g * q / (10.0 * tp) * std::exp(-0.5 * (n + 2)) * m;
    case Proposition::lb_a: return 3.0 * g * q / (32.0 * tp) * std::exp(-0.5 * (2 * n + 5)) * m;
    case Proposition::ub_e: return 3.0 * g * q / (8.0 * std::pow(t, 0.5 * n)) * std::exp(-psi * psi / (4.0 * t)) * m;
    default: break;
    }
    require(false, "proposition has no explicit envelope");
    return 0.0;
}

Certificate certify(const SolutionEvaluator& ev, double t, Proposition p, const CertifyOptions& o)
{
    require(t > 0.0, "time must be positive");
    const InitialDatum& d = ev.datum();
    const int n = d.dimension();
    const double tol = d.hull_tolerance();
    const double df = d.diameter();
    const double R0 = null_reference_radius(n, t);
    const double Rc = critical_reference_radius(n, t);
    const double psi = resolve_psi(n, t, o);
    const auto bundle = sample_normal_bundle(d.hull(), resolve_directions(n, o.directions));
    const int m = o.radial_samples;

    Certificate cert;
    cert.id = p;
    std::vector<Vec> points;
    std::vector<Vec> normals;
    auto add_rays = [&](double r1, double r2) {
        for (const RaySample& s : annulus_samples(bundle, r1, r2, m)) {
            points.push_back(s.x);
            normals.push_back(s.nu);
        }
    };
    auto add_interior = [&] {
        for (const Vec& x : interior_samples(d.hull(), o.interior_samples, o.seed)) {
            points.push_back(x);
            normals.push_back(Vec::Zero());
        }
    };

    enum class Quantity { value, radial_slope, radial_curvature };
    Quantity q = Quantity::value;
    // slack(v) > 0 means the inequality holds at a sample with quantity v.
    std::function<double(double)> slack;
    switch (p) {
    case Proposition::negativity_null:
        add_interior();
        if (R0 - df + tol > 0.0) add_rays(0.0, R0 - df + tol);
        slack = [](double u) { return -u; };
        break;
    case Proposition::positivity_null:
        add_rays(R0 - tol, psi + tol);
        slack = [](double u) { return u; };
        break;
    case Proposition::monotonicity_null:
        add_rays(R0 - df - tol, R0 + tol);
        q = Quantity::radial_slope;
        slack = [](double v) { return v; };
        break;
    case Proposition::positivity_crit:
        add_rays(0.0, Rc - df + tol);
        q = Quantity::radial_slope;
        slack = [](double v) { return v; };
        break;
    case Proposition::negativity_crit:
        add_rays(Rc - tol, psi + tol);
        q = Quantity::radial_slope;
        slack = [](double v) { return -v; };
        break;
    case Proposition::concavity_crit:
        add_rays(Rc - df - tol, Rc + tol);
        q = Quantity::radial_curvature;
        slack = [](double v) { return -v; };
        break;
    case Proposition::lb_cs:
        add_interior();
        cert.bound = envelope_bound(d, t, p, psi);
        slack = [b = cert.bound](double u) { return -u - b; };
        break;
    case Proposition::ub_a:
        add_rays(Rc - df - tol, Rc + tol);
        cert.bound = envelope_bound(d, t, p, psi);
        slack = [b = cert.bound](double u) { return b - u; };
        break;
    case Proposition::lb_a:
        add_rays(Rc - df - tol, Rc + tol);
        cert.bound = envelope_bound(d, t, p, psi);
        slack = [b = cert.bound](double u) { return u - b; };
        break;
    case Proposition::ub_e: {
        // u vanishes identically beyond distance t + d_f (finite speed of propagation).
        const double far = t + df;
        if (psi - tol < far) {
            add_rays(psi - tol, std::min(far, psi + 12.0 * std::sqrt(t)));
            if (psi + 12.0 * std::sqrt(t) < far) add_rays(psi + 12.0 * std::sqrt(t), far);
        }
        cert.bound = envelope_bound(d, t, p, psi);
        slack = [b = cert.bound](double u) { return b - std::abs(u); };
        break;
    }
    case Proposition::convex: {
        const auto inner = interior_samples(d.hull(), o.convex_pairs, o.seed);
        std::mt19937_64 rng(o.seed);
        std::normal_distribution<double> normal;
        for (int k = 0; k < o.convex_pairs; ++k) {
            Vec om = Vec::Zero();
            for (int a = 0; a < n; ++a) om[a] = normal(rng);
            if (om.norm() == 0.0) om = Vec::UnitX();
            points.push_back(inner[std::size_t(k) % inner.size()]);
            normals.push_back(om.normalized());
        }
        q = Quantity::radial_curvature;
        slack = [](double v) { return v; };
        break;
    }
    }

    const auto values = parallel_map<double>(
        points.size(),
        [&](std::size_t i) {
            if (q == Quantity::value) return ev.value(points[i], t);
            if (q == Quantity::radial_slope) return directional_derivative(ev, points[i], t, normals[i]);
            return ev.dir2(points[i], t, normals[i]);
        },
        o.mode);
    cert.samples = int(values.size());
    cert.margin = std::numeric_limits<double>::infinity();
    for (double v : values) cert.margin = std::min(cert.margin, slack(v));
    if (values.empty()) cert.margin = 0.0;
    cert.pass = !values.empty() && cert.margin > 0.0;
    // An empty ub_E region is vacuously satisfied.
    if (values.empty() && p == Proposition::ub_e) cert.pass = true;
    return cert;
}

std::vector<Certificate> certify_signs(const SolutionEvaluator& ev, double t, const CertifyOptions& options)
{
    std::vector<Certificate> out;
    for (Proposition p : all_propositions()) out.push_back(certify(ev, t, p, options));
    return out;
}

Threshold empirical_threshold(const SolutionEvaluator& ev, Proposition p, const CertifyOptions& options,
                              double t_start, double t_max)
{
    require(t_start > 0.0 && t_max >= t_start, "invalid threshold search range");
    std::vector<int> passes;  // cached per dyadic index
    auto passes_at = [&](std::size_t k) {
        while (passes.size() <= k)
            passes.push_back(certify(ev, t_start * std::ldexp(1.0, int(passes.size())), p, options).pass);
        return passes[k] != 0;
    };
    for (std::size_t k = 0; t_start * std::ldexp(1.0, int(k)) <= t_max; ++k)
        if (passes_at(k) && passes_at(k + 1) && passes_at(k + 2)) return {true, t_start * std::ldexp(1.0, int(k))};
    return {};
}

RateFit rate_fit(const std::vector<double>& t, const std::vector<double>& quantity)
{
    require(t.size() == quantity.size(), "rate fit needs matching series");
    require(t.size() >= 4, "rate fit needs at least four samples");
    const double ratio = t[1] / t[0];
    for (std::size_t i = 0; i < t.size(); ++i) {
        require(t[i] > 0.0, "rate fit times must be positive");
        require(quantity[i] != 0.0 && std::isfinite(quantity[i]), "rate fit quantity must be non-zero");
        if (i > 0) require(std::abs(t[i] / t[i - 1] - ratio) <= 1e-6 * ratio, "rate fit needs geometric spacing");
    }
    require(ratio > 1.0, "rate fit times must increase");
    const std::size_t N = t.size();
    Eigen::MatrixXd A(N, 2);
    Eigen::VectorXd b(N);
    for (std::size_t i = 0; i < N; ++i) {
        A(i, 0) = std::log(t[i]);
        A(i, 1) = 1.0;
        b(i) = std::log(std::abs(quantity[i]));
    }
    const Eigen::Vector2d sol = A.colPivHouseholderQr().solve(b);
    RateFit fit;
    fit.slope = sol(0);
    fit.intercept = sol(1);
    fit.residual = std::sqrt((A * sol - b).squaredNorm() / double(N));
    fit.samples = int(N);
    return fit;
}

SpotReport build_spot_report(const SolutionEvaluator& ev, double t, const ReportOptions& options)
{
    const InitialDatum& d = ev.datum();
    const int n = d.dimension();
    SpotReport r;
    r.n = n;
    r.t = t;
    r.psi = resolve_psi(n, t, options.certify);
    r.null_reference = null_reference_radius(n, t);
    r.critical_reference = critical_reference_radius(n, t);
    r.diameter = d.diameter();
    r.hull_tol = d.hull_tolerance();
    const auto bundle = sample_normal_bundle(d.hull(), resolve_directions(n, options.certify.directions));
    const Execution mode = options.certify.mode;

    if (options.nulls || options.criticals) {
        r.directions = parallel_map<DirectionRecord>(
            bundle.size(),
            [&](std::size_t i) {
                DirectionRecord rec;
                rec.normal = bundle[i];
                if (options.nulls) rec.null_root = trace_null_radius(ev, t, bundle[i]);
                if (options.criticals) {
                    rec.critical_root = find_critical_radius(ev, t, bundle[i]);
                    if (rec.critical_root.found)
                        rec.dir2_at_critical =
                            ev.dir2(phi_map(bundle[i].xi, bundle[i].nu, rec.critical_root.rho), t, bundle[i].nu);
                }
                return rec;
            },
            mode);
    }
    if (options.spots) {
        r.hot_spots = find_hot_spots(ev, t, bundle, mode);
        r.cold_spot = find_cold_spot(ev, t);
        r.cold_spot_second = find_cold_spot(ev, t, second_cold_start(d));
        r.centroid_distance = (r.cold_spot->x - d.centroid()).norm();
    }
    if (options.certificates) r.certificates = certify_signs(ev, t, options.certify);
    return r;
}

namespace
{
nlohmann::json vec_json(const Vec& v, int n) { return std::vector<double>(v.data(), v.data() + n); }

nlohmann::json root_json(const RayRoot& r)
{
    nlohmann::json j = {{"found", r.found}, {"bracket", {r.lo, r.hi}}};
    j["rho"] = r.found ? nlohmann::json(r.rho) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json cold_json(const ColdSpot& c, int n)
{
    return {{"x", vec_json(c.x, n)}, {"value", c.value}, {"iterations", c.iterations}, {"in_hull", c.in_hull}};
}
}  // namespace

nlohmann::json to_json(const SpotReport& r)
{
    const int n = r.n;
    nlohmann::json j;
    j["t"] = r.t;
    j["psi"] = r.psi;
    j["reference_radii"] = {{"null", r.null_reference}, {"critical", r.critical_reference}, {"d_f", r.diameter}};
    j["hull_tol"] = r.hull_tol;
    nlohmann::json dirs = nlohmann::json::array();
    for (const DirectionRecord& d : r.directions)
        dirs.push_back({{"xi", vec_json(d.normal.xi, n)},
                        {"nu", vec_json(d.normal.nu, n)},
                        {"null_radius", root_json(d.null_root)},
                        {"critical_radius", root_json(d.critical_root)},
                        {"dir2_at_critical", d.dir2_at_critical}});
    j["directions"] = dirs;
    nlohmann::json hot = nlohmann::json::array();
    for (const Spot& s : r.hot_spots)
        hot.push_back({{"x", vec_json(s.x, n)}, {"value", s.value}, {"hull_distance", s.hull_distance}});
    j["hot_spots"] = hot;
    j["cold_spot"] = r.cold_spot ? cold_json(*r.cold_spot, n) : nlohmann::json(nullptr);
    j["cold_spot_second_start"] = r.cold_spot_second ? cold_json(*r.cold_spot_second, n) : nlohmann::json(nullptr);
    j["centroid_distance"] = r.centroid_distance;
    nlohmann::json certs = nlohmann::json::object();
    for (const Certificate& c : r.certificates)
        certs[proposition_name(c.id)] = {{"pass", c.pass}, {"margin", c.margin}, {"bound", c.bound}, {"samples", c.samples}};
    j["certificates"] = certs;
    return j;
}

}  // namespace dws
