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


#include "dws/experiment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dws/sweeps.hpp"

namespace dws
{
namespace
{
using nlohmann::json;

std::string num(double v) { return fmt::format("{:.17g}", v); }
std::string time_tag(double t) { return fmt::format("{:g}", t); }

const char* axis_names[] = {"x", "y", "z"};

std::string coordinate_header(int n)
{
    std::string h;
    for (int a = 0; a < n; ++a) h += std::string(axis_names[a]) + ",";
    return h;
}

std::string coordinates(const Vec& x, int n)
{
    std::string s;
    for (int a = 0; a < n; ++a) s += num(x[a]) + ",";
    return s;
}

Vec read_vec(const json& j, int n, const char* what)
{
    if (!j.is_array() || int(j.size()) != n) throw ConfigError(fmt::format("{} needs {} components", what, n));
    Vec v = Vec::Zero();
    for (int a = 0; a < n; ++a) v[a] = j[a].get<double>();
    return v;
}

class Writer
{
public:
    Writer(const std::filesystem::path& dir, std::ostream& log) : dir_(dir), log_(log) {}

    std::ofstream open(const std::string& name)
    {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        written_.push_back(path);
        fmt::print(log_, "wrote {}\n", path.string());
        return out;
    }

    std::vector<std::filesystem::path> files() const { return written_; }

private:
    std::filesystem::path dir_;
    std::ostream& log_;
    std::vector<std::filesystem::path> written_;
};

void write_json(Writer& w, const std::string& name, const json& j)
{
    auto out = w.open(name);
    out << j.dump(2) << '\n';
}

std::vector<Vec> grid_points(const ExperimentConfig& c, int n)
{
    std::vector<int> counts = c.grid.points;
    if (counts.empty()) counts.assign(std::size_t(n), 41);
    return tensor_grid(n, c.grid.lower, c.grid.upper, counts);
}

CertifyOptions certify_options(const ExperimentConfig& c)
{
    CertifyOptions o;
    o.directions = c.directions;
    o.seed = c.seed;
    o.psi_factor = c.psi_factor;
    return o;
}

json report_json(const InitialDatum& d, const SpotReport& r, std::uint64_t seed)
{
    json j = to_json(r);
    j["datum"] = d.to_json();
    j["seed"] = seed;
    return j;
}

void run_evaluate(const ExperimentConfig& c, const SolutionEvaluator& ev, Writer& w)
{
    const int n = ev.datum().dimension();
    const auto pts = grid_points(c, n);
    for (double t : c.times) {
        const auto samples = evaluate_points(ev, pts, t);
        auto out = w.open(fmt::format("field_t{}.csv", time_tag(t)));
        fmt::print(out, "# units: coordinates and t in the units of the datum; u, principal and wave_remainder in "
                        "units of f. t={}\n",
                   num(t));
        fmt::print(out, "{}u,principal,wave_remainder\n", coordinate_header(n));
        for (const FieldSample& s : samples)
            fmt::print(out, "{}{},{},{}\n", coordinates(s.x, n), num(s.value), num(s.principal),
                       num(s.wave_remainder));
    }
}

void run_reports(const ExperimentConfig& c, const SolutionEvaluator& ev, Writer& w)
{
    ReportOptions o;
    o.nulls = c.mode == Mode::null;
    o.criticals = c.mode == Mode::critical;
    o.spots = c.mode == Mode::spots;
    o.certificates = c.mode == Mode::certify;
    o.certify = certify_options(c);
    for (double t : c.times)
        write_json(w, fmt::format("report_t{}.json", time_tag(t)),
                   report_json(ev.datum(), build_spot_report(ev, t, o), c.seed));
}

double mean_root(const std::vector<DirectionRecord>& dirs, bool critical)
{
    double sum = 0.0;
    int count = 0;
    for (const DirectionRecord& d : dirs) {
        const RayRoot& r = critical ? d.critical_root : d.null_root;
        if (!r.found) return std::numeric_limits<double>::quiet_NaN();
        sum += r.rho;
        ++count;
    }
    return count ? sum / count : std::numeric_limits<double>::quiet_NaN();
}

void run_sweep(const ExperimentConfig& c, const SolutionEvaluator& ev, Writer& w)
{
    ReportOptions o;
    o.certify = certify_options(c);
    std::vector<SpotReport> reports;
    for (double t : c.times) {
        reports.push_back(build_spot_report(ev, t, o));
        write_json(w, fmt::format("report_t{}.json", time_tag(t)), report_json(ev.datum(), reports.back(), c.seed));
    }
    std::vector<double> ts, dist;
    for (const SpotReport& r : reports) {
        ts.push_back(r.t);
        dist.push_back(r.centroid_distance);
    }
    double slope = std::numeric_limits<double>::quiet_NaN();
    try {
        slope = rate_fit(ts, dist).slope;
    } catch (const std::invalid_argument&) {
        // Too few, non-geometric or degenerate samples: the column stays nan.
    }

    auto out = w.open("sweep.csv");
    fmt::print(out, "# units: t in time units, radii and distances in length units, values in units of f; "
                    "cert_* are 1 for pass and 0 for fail\n");
    std::string header = "t,rho0,rho_c,cold_centroid_distance,hot_value,cold_value,centroid_rate_slope";
    for (Proposition p : all_propositions()) header += ",cert_" + proposition_name(p);
    fmt::print(out, "{}\n", header);
    for (const SpotReport& r : reports) {
        double hot = -std::numeric_limits<double>::infinity();
        for (const Spot& s : r.hot_spots) hot = std::max(hot, s.value);
        std::string row = fmt::format("{},{},{},{},{},{},{}", num(r.t), num(mean_root(r.directions, false)),
                                      num(mean_root(r.directions, true)), num(r.centroid_distance), num(hot),
                                      num(r.cold_spot->value), num(slope));
        for (const Certificate& cert : r.certificates) row += cert.pass ? ",1" : ",0";
        fmt::print(out, "{}\n", row);
    }
}

void run_oracle_compare(const ExperimentConfig& c, const SolutionEvaluator& ev, Writer& w)
{
    const InitialDatum& d = ev.datum();
    const int n = d.dimension();
    const auto probes = grid_points(c, n);
    for (double t : c.times) {
        OracleRun run = c.oracle.scheme == OracleScheme::finite_difference_1d
                          ? fd_solve_1d(d, t, c.oracle.dx, 0.5 * c.oracle.dx, c.oracle.half_width)
                          : spectral_solve(d, t, c.oracle.half_width > 0.0 ? c.oracle.half_width : 64.0,
                                           c.oracle.modes);
        // Probes snap to the nearest oracle node so no interpolation enters the comparison.
        std::vector<Vec> nodes;
        std::vector<double> oracle;
        for (const Vec& p : probes) {
            int idx[3] = {0, 0, 0};
            for (int a = 0; a < n; ++a) idx[a] = run.index_of(p[a]);
            nodes.push_back(run.node(idx[0], idx[1], idx[2]));
            oracle.push_back(run.at(idx[0], idx[1], idx[2]));
        }
        const auto exact = evaluate_points(ev, nodes, t);
        auto out = w.open(fmt::format("oracle_compare_t{}.csv", time_tag(t)));
        fmt::print(out, "# units: coordinates in length units; u_exact, u_oracle, diff in units of f. t={} scheme={}\n",
                   num(t), c.oracle.scheme == OracleScheme::finite_difference_1d ? "fd" : "spectral");
        fmt::print(out, "{}u_exact,u_oracle,diff\n", coordinate_header(n));
        double max_diff = 0.0, sup = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double diff = exact[i].value - oracle[i];
            max_diff = std::max(max_diff, std::abs(diff));
            sup = std::max(sup, std::abs(exact[i].value));
            fmt::print(out, "{}{},{},{}\n", coordinates(nodes[i], n), num(exact[i].value), num(oracle[i]), num(diff));
        }
        fmt::print(out, "# summary max_abs_diff={} sup_abs_u={} relative={}\n", num(max_diff), num(sup),
                   num(sup > 0.0 ? max_diff / sup : 0.0));
    }
}

void run_asymptotics(const ExperimentConfig& c, Writer& w)
{
    const AsymptoticsSpec& a = c.asymptotics;
    const KernelFamily family{a.parity, a.ell};
    auto out = w.open("asymptotics.csv");
    fmt::print(out, "# units: t and r nondimensional; exact and expansion are e^(-t/2) times the combined kernel; "
                    "err_times_t3 is |exact - expansion| / prefactor * t^3. family={} ell={} kind={}\n",
               a.parity == Parity::odd ? "odd" : "even", a.ell,
               a.kind == ExpansionKind::sqrt_scale ? "sqrt" : a.kind == ExpansionKind::small_o ? "smallo" : "leading");
    fmt::print(out, "t,r,exact,expansion,ratio,err_times_t3\n");
    for (double t : c.times)
        for (double q : a.radii) {
            const double r = a.kind == ExpansionKind::leading ? q : q * std::sqrt(t);
            if (r > t) continue;
            const double exact = kernel_ktilde_scaled(family, r, t);
            double expansion = 0.0;
            switch (a.kind) {
            case ExpansionKind::sqrt_scale: expansion = ktilde_expansion_sqrt(family, r, t); break;
            case ExpansionKind::small_o: expansion = ktilde_expansion_smallo(family, r, t); break;
            case ExpansionKind::leading: expansion = ktilde_leading_order(family, t); break;
            }
            const double pre = ktilde_expansion_prefactor(family, r, t);
            fmt::print(out, "{},{},{},{},{},{}\n", num(t), num(r), num(exact), num(expansion), num(exact / expansion),
                       num(std::abs(exact - expansion) / pre * t * t * t));
        }
}

}  // namespace

Mode mode_from_name(const std::string& name)
{
    static const std::pair<const char*, Mode> names[] = {
        {"evaluate", Mode::evaluate}, {"null", Mode::null},     {"critical", Mode::critical},
        {"spots", Mode::spots},       {"certify", Mode::certify}, {"sweep", Mode::sweep},
        {"oracle-compare", Mode::oracle_compare}, {"asymptotics", Mode::asymptotics}};
    for (const auto& [s, m] : names)
        if (name == s) return m;
    throw ConfigError("unknown mode '" + name + "'");
}

std::string mode_name(Mode m)
{
    switch (m) {
    case Mode::evaluate: return "evaluate";
    case Mode::null: return "null";
    case Mode::critical: return "critical";
    case Mode::spots: return "spots";
    case Mode::certify: return "certify";
    case Mode::sweep: return "sweep";
    case Mode::oracle_compare: return "oracle-compare";
    case Mode::asymptotics: return "asymptotics";
    }
    return "evaluate";
}

std::vector<double> geometric_times(double t_min, double t_max, double factor)
{
    if (!(t_min > 0.0) || !(t_max >= t_min)) throw ConfigError("need 0 < t_min <= t_max");
    if (!(factor > 1.0)) throw ConfigError("geometric sweep factor must exceed 1");
    std::vector<double> out;
    for (int k = 0;; ++k) {
        const double t = t_min * std::pow(factor, k);
        if (t > t_max * (1.0 + 1e-9)) break;
        out.push_back(t);
    }
    return out;
}

ExperimentConfig ExperimentConfig::from_json(const json& j)
{
    ExperimentConfig c;
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        c.datum = j.at("datum");
        const int n = c.datum.at("dimension").get<int>();
        if (n < 1 || n > 3) throw ConfigError("datum dimension must be 1, 2 or 3");
        if (j.contains("mode")) c.mode = mode_from_name(j["mode"].get<std::string>());
        if (j.contains("times")) {
            c.times = j["times"].get<std::vector<double>>();
        } else if (j.contains("t_min")) {
            c.times = geometric_times(j.at("t_min").get<double>(), j.at("t_max").get<double>(),
                                      j.at("factor").get<double>());
        }
        if (j.contains("grid")) {
            const json& g = j["grid"];
            if (g.contains("lower")) c.grid.lower = read_vec(g["lower"], n, "grid.lower");
            if (g.contains("upper")) c.grid.upper = read_vec(g["upper"], n, "grid.upper");
            if (g.contains("points")) {
                const json& p = g["points"];
                c.grid.points = p.is_array() ? p.get<std::vector<int>>() : std::vector<int>(std::size_t(n), p.get<int>());
            }
        }
        c.directions = j.value("directions", 0);
        if (j.contains("psi_factor")) c.psi_factor = j["psi_factor"].get<double>();
        if (j.contains("oracle")) {
            const json& o = j["oracle"];
            const std::string scheme = o.value("scheme", n == 1 ? "fd" : "spectral");
            if (scheme == "fd") c.oracle.scheme = OracleScheme::finite_difference_1d;
            else if (scheme == "spectral") c.oracle.scheme = OracleScheme::spectral_torus;
            else throw ConfigError("oracle.scheme must be 'fd' or 'spectral'");
            c.oracle.dx = o.value("dx", c.oracle.dx);
            c.oracle.half_width = o.value("L", c.oracle.half_width);
            c.oracle.modes = o.value("modes", c.oracle.modes);
        } else if (n > 1) {
            c.oracle.scheme = OracleScheme::spectral_torus;
        }
        if (j.contains("asymptotics")) {
            const json& a = j["asymptotics"];
            const std::string fam = a.value("family", "odd");
            if (fam == "odd") c.asymptotics.parity = Parity::odd;
            else if (fam == "even") c.asymptotics.parity = Parity::even;
            else throw ConfigError("asymptotics.family must be 'odd' or 'even'");
            c.asymptotics.ell = a.value("ell", 0);
            const std::string kind = a.value("expansion", "sqrt");
            if (kind == "sqrt") c.asymptotics.kind = ExpansionKind::sqrt_scale;
            else if (kind == "smallo") c.asymptotics.kind = ExpansionKind::small_o;
            else if (kind == "leading") c.asymptotics.kind = ExpansionKind::leading;
            else throw ConfigError("asymptotics.expansion must be 'sqrt', 'smallo' or 'leading'");
            if (a.contains("r_over_sqrt_t")) c.asymptotics.radii = a["r_over_sqrt_t"].get<std::vector<double>>();
            if (a.contains("r")) c.asymptotics.radii = a["r"].get<std::vector<double>>();
        }
        if (j.contains("quadrature")) {
            const json& q = j["quadrature"];
            c.quadrature.radial = q.value("radial", c.quadrature.radial);
            c.quadrature.angular = q.value("angular", c.quadrature.angular);
            c.quadrature.azimuthal = q.value("azimuthal", c.quadrature.azimuthal);
        }
        if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
        c.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    c.validate();
    return c;
}

void ExperimentConfig::validate() const
{
    if (times.empty()) throw ConfigError("config needs 'times' or 't_min'/'t_max'/'factor'");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !std::isfinite(times[i])) throw ConfigError("times must be positive");
        if (i > 0 && !(times[i] > times[i - 1])) throw ConfigError("times must be strictly increasing");
    }
    try {
        const InitialDatum d = InitialDatum::from_json(datum);
        const int n = d.dimension();
        if (!grid.points.empty() && int(grid.points.size()) != n)
            throw ConfigError("grid.points needs one count per dimension");
        for (int p : grid.points)
            if (p < 1) throw ConfigError("grid.points must be positive");
        if (mode == Mode::oracle_compare && oracle.scheme == OracleScheme::finite_difference_1d && n != 1)
            throw ConfigError("the finite-difference oracle is one-dimensional");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid datum: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid datum: ") + e.what());
    }
    if (directions < 0) throw ConfigError("directions must be non-negative");
    if (psi_factor && !(*psi_factor > 0.0)) throw ConfigError("psi_factor must be positive");
    if (!(oracle.dx > 0.0) || oracle.modes < 2 || oracle.half_width < 0.0) throw ConfigError("invalid oracle settings");
    if (asymptotics.ell < 0 || asymptotics.ell >= kMaxKernelOrder) throw ConfigError("asymptotics.ell out of range");
    if (quadrature.radial < 2 || quadrature.angular < 2 || quadrature.azimuthal < 1)
        throw ConfigError("quadrature orders too small");
}

std::vector<std::filesystem::path> run(const ExperimentConfig& config, std::ostream& log)
{
    config.validate();
    std::filesystem::create_directories(config.output_dir);
    Writer w(config.output_dir, log);
    if (config.mode == Mode::asymptotics) {
        run_asymptotics(config, w);
        return w.files();
    }
    const InitialDatum datum = InitialDatum::from_json(config.datum);
    EvalOptions eo;
    eo.orders = config.quadrature;
    const SolutionEvaluator ev(datum, eo);
    switch (config.mode) {
    case Mode::evaluate: run_evaluate(config, ev, w); break;
    case Mode::null:
    case Mode::critical:
    case Mode::spots:
    case Mode::certify: run_reports(config, ev, w); break;
    case Mode::sweep: run_sweep(config, ev, w); break;
    case Mode::oracle_compare: run_oracle_compare(config, ev, w); break;
    case Mode::asymptotics: break;
    }
    return w.files();
}

}  // namespace dws
