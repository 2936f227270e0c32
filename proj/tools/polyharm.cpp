// polyharm: separable polyharmonic solutions, verification oracles, and
// half-space Dirichlet solvers behind one subcommand-style binary.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyharm/evolution.hpp"
#include "polyharm/expansion.hpp"
#include "polyharm/halfspace.hpp"
#include "polyharm/json_io.hpp"
#include "polyharm/oracle.hpp"
#include "polyharm/separable.hpp"
#include "polyharm/version.hpp"

using nlohmann::json;
using namespace polyharm;

namespace {

// ---------------------------------------------------------------------------
// output plumbing

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// JSON serialization with floats at 17 significant digits; keys come out
// in nlohmann's sorted order, so identical documents are byte-identical.
void dump_json(const json& j, std::ostream& os, int indent = 0) {
    const std::string pad(size_t(indent), ' ');
    const std::string pad2(size_t(indent + 2), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << pad2 << json(key).dump() << ": ";
                dump_json(value, os, indent + 2);
            }
            os << "\n" << pad << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            bool first = true;
            for (const auto& value : j) {
                if (!first) os << ",\n";
                first = false;
                os << pad2;
                dump_json(value, os, indent + 2);
            }
            os << "\n" << pad << "]";
            return;
        }
        case json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

void emit_json(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        dump_json(j, std::cout);
        std::cout << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw ConfigError("cannot open output file: " + out_path);
        dump_json(j, os);
        os << "\n";
    }
}

json provenance(const json& config_echo) {
    json p;
    p["tool"] = "polyharm";
    p["version"] = version_string();
    p["config"] = config_echo;
    if (const char* threads = std::getenv("POLYHARM_THREADS")) p["threads"] = threads;
    return p;
}

json load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return j;
}

// ---------------------------------------------------------------------------
// small parsers

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw ConfigError("bad number in list: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty number list");
    return out;
}

struct GridSpec {
    std::vector<std::string> names;
    Grid grid;
};

/// "x1=-2:2:41,x2=0:4:41"
GridSpec parse_grid_spec(const std::string& s) {
    GridSpec spec;
    std::vector<double> lo, hi;
    std::vector<int> counts;
    std::stringstream ss(s);
    std::string axis;
    while (std::getline(ss, axis, ',')) {
        const auto eq = axis.find('=');
        if (eq == std::string::npos) throw ConfigError("grid axis needs name=lo:hi:count: " + axis);
        spec.names.push_back(axis.substr(0, eq));
        const std::string range = axis.substr(eq + 1);
        const auto c1 = range.find(':');
        const auto c2 = range.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ConfigError("grid axis needs lo:hi:count: " + range);
        lo.push_back(std::stod(range.substr(0, c1)));
        hi.push_back(std::stod(range.substr(c1 + 1, c2 - c1 - 1)));
        counts.push_back(std::stoi(range.substr(c2 + 1)));
        if (counts.back() < 1) throw ConfigError("grid axis count must be >= 1");
        if (counts.back() > 1 && !(hi.back() > lo.back()))
            throw ConfigError("grid axis needs hi > lo");
    }
    if (spec.names.empty()) throw ConfigError("empty grid spec");
    const auto d = static_cast<Eigen::Index>(lo.size());
    spec.grid = Grid::from_ranges(Eigen::Map<Eigen::VectorXd>(lo.data(), d),
                                  Eigen::Map<Eigen::VectorXd>(hi.data(), d),
                                  Eigen::Map<Eigen::VectorXi>(counts.data(), d));
    return spec;
}

// heaviside | gaussian:w | box:a,b | file.csv
BoundaryData parse_boundary_data(const std::string& s, int dim) {
    if (s == "heaviside") {
        if (dim != 1) throw ConfigError("heaviside boundary data is one-dimensional");
        return BoundaryData::heaviside();
    }
    if (s.rfind("gaussian", 0) == 0) {
        double width = 1.0;
        if (s.size() > 8) {
            if (s[8] != ':') throw ConfigError("expected gaussian:width");
            width = std::stod(s.substr(9));
        }
        return BoundaryData::gaussian(width, dim);
    }
    if (s.rfind("box:", 0) == 0) {
        auto nums = parse_number_list(s.substr(4));
        if (nums.size() != 2) throw ConfigError("expected box:a,b");
        return BoundaryData::box(nums[0], nums[1], dim);
    }
    // otherwise a CSV file of "x,f" rows
    if (dim != 1) throw ConfigError("tabulated boundary data is one-dimensional");
    std::ifstream is(s);
    if (!is) throw ConfigError("cannot open boundary data file: " + s);
    std::vector<double> xs, fs;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto nums = parse_number_list(line);
        if (nums.size() != 2) throw ConfigError("boundary CSV rows must be 'x,f'");
        xs.push_back(nums[0]);
        fs.push_back(nums[1]);
    }
    const auto count = static_cast<Eigen::Index>(xs.size());
    return BoundaryData::tabulated(Eigen::Map<Eigen::ArrayXd>(xs.data(), count),
                                   Eigen::Map<Eigen::ArrayXd>(fs.data(), count));
}

std::vector<Eigen::VectorXd> seeded_points(std::uint64_t seed, int m, int count,
                                           double half_width = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-half_width, half_width);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd p(m);
        for (int j = 0; j < m; ++j) p[j] = coord(rng);
        pts.push_back(std::move(p));
    }
    return pts;
}

void write_csv_header(std::ostream& os, const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) os << names[i] << ",";
    os << "u\n";
}

// ---------------------------------------------------------------------------
// subcommand payloads; each returns the process exit code

int run_expand(int n, int m, const std::string& format, const std::string& out_path) {
    auto terms = expand_polyharmonic(n, m);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["m"] = m;
        j["terms"] = json::array();
        for (const auto& t : terms) {
            json tj;
            tj["h"] = std::vector<int>(t.derivative_orders.begin(), t.derivative_orders.end());
            for (auto& v : tj["h"]) v = v.get<int>() / 2;
            tj["coeff"] = t.coefficient;
            tj["orders"] = std::vector<int>(t.derivative_orders.begin(), t.derivative_orders.end());
            j["terms"].push_back(tj);
        }
        emit_json(j, out_path);
        return 0;
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "coeff";
        for (int i = 1; i <= m; ++i) os << ",order" << i;
        os << "\n";
        for (const auto& t : terms) {
            os << t.coefficient;
            for (int i = 0; i < m; ++i) os << "," << t.derivative_orders[i];
            os << "\n";
        }
    } else if (format == "text") {
        for (const auto& t : terms) {
            os << t.coefficient << " *";
            for (int i = 0; i < m; ++i)
                if (t.derivative_orders[i] > 0)
                    os << " d" << t.derivative_orders[i] << "/dx" << (i + 1) << "^"
                       << t.derivative_orders[i];
            os << "\n";
        }
    } else {
        throw ConfigError("expand: unknown format '" + format + "'");
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot open output file: " + out_path);
        f << os.str();
    }
    return 0;
}

int run_build(const std::string& config_path, const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = solution_from_json(config);
    json j;
    j["status"] = "pass";
    j["metrics"]["m"] = sol.dims();
    j["metrics"]["n"] = sol.power();
    j["metrics"]["K"] = sol.last_K();
    j["solution"] = solution_to_json(sol);
    j["provenance"] = provenance(config);
    emit_json(j, out_path);
    return 0;
}

int run_verify(const std::string& config_path, int points, std::uint64_t seed, double tol,
               const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = solution_from_json(config);
    auto stats = residual_report<double>(sol, seeded_points(seed, sol.dims(), points));

    json j;
    j["status"] = stats.max_rel <= tol ? "pass" : "fail";
    j["metrics"]["max_abs"] = stats.max_abs;
    j["metrics"]["max_rel"] = stats.max_rel;
    j["metrics"]["cancellation_scale"] = stats.scale;
    j["metrics"]["tol"] = tol;
    j["metrics"]["points"] = points;
    j["metrics"]["seed"] = seed;
    j["per_point"] = stats.per_point;
    j["provenance"] = provenance(config);
    emit_json(j, out_path);
    return stats.max_rel <= tol ? 0 : 1;
}

int run_fd_verify(const std::string& config_path, int n, const std::string& point_spec,
                  const std::string& ladder_spec, const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = solution_from_json(config);
    auto coords = parse_number_list(point_spec);
    if (int(coords.size()) != sol.dims())
        throw ConfigError("fd-verify: point dimension does not match the solution");
    Eigen::VectorXd point =
        Eigen::Map<Eigen::VectorXd>(coords.data(), Eigen::Index(coords.size()));

    const std::vector<double> ladder =
        ladder_spec == "default" ? default_h_ladder() : parse_number_list(ladder_spec);
    FieldSampler field = [&sol](const Eigen::Ref<const Eigen::VectorXd>& p) {
        return eval<double>(sol, p);
    };
    auto result = convergence_study(field, point, n, ladder);

    std::string verdict;
    if (result.status == ConvergenceStatus::Inconclusive)
        verdict = "inconclusive";
    else
        verdict = (result.observed_order >= 1.7 && result.observed_order <= 2.3) ? "pass" : "fail";

    json j;
    j["status"] = verdict;
    j["metrics"]["observed_order"] = result.observed_order;
    j["metrics"]["n"] = n;
    j["residuals"] = result.residuals;
    j["h_ladder"] = ladder;
    j["provenance"] = provenance(config);
    emit_json(j, out_path);
    return verdict == "fail" ? 1 : 0;
}

int run_sample(const std::string& config_path, const std::string& grid_spec,
               const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = solution_from_json(config);
    auto spec = parse_grid_spec(grid_spec);
    if (spec.grid.dims() != sol.dims())
        throw ConfigError("sample: grid dimension does not match the solution");
    auto values = eval_grid<double>(sol, spec.grid);

    std::ofstream os(out_path);
    if (!os) throw ConfigError("cannot open output file: " + out_path);
    write_csv_header(os, spec.names);
    for (Eigen::Index i = 0; i < spec.grid.size(); ++i) {
        Eigen::VectorXd p = spec.grid.point(i);
        for (int d = 0; d < spec.grid.dims(); ++d) os << format_double(p[d]) << ",";
        os << format_double(values[size_t(i)]) << "\n";
    }
    return 0;
}

int run_halfspace_solve(const std::string& f_spec, double L, int n, int m,
                        const std::string& grid_spec, const std::string& route, double w_max,
                        double quad_tol, const std::string& out_path) {
    auto f = parse_boundary_data(f_spec, m - 1);
    auto spec = parse_grid_spec(grid_spec);
    if (spec.grid.dims() != m) throw ConfigError("halfspace solve: grid must have m axes");
    if (route != "fourier" && route != "convolution" && route != "both")
        throw ConfigError("halfspace solve: route must be fourier, convolution, or both");
    if (route != "fourier" && (m != 2 || n != 1))
        throw ConfigError("halfspace solve: the convolution route needs m = 2, n = 1");

    // smallest height the grid will request
    const double x_m_min = spec.grid.origin[m - 1];
    if (!(x_m_min > L))
        throw ConfigError("halfspace solve: grid must start above the boundary x_m = L");

    HalfspaceConfig cfg;
    cfg.L = L;
    cfg.n = n;
    cfg.w_max = w_max;
    cfg.x_m_min = x_m_min;
    cfg.quad.abs_tol = quad_tol;

    std::optional<HalfspaceSolution> hs;
    if (route != "convolution") hs = build_halfspace_solution(f, m, cfg);

    std::ofstream os(out_path);
    if (!os) throw ConfigError("cannot open output file: " + out_path);
    for (const auto& name : spec.names) os << name << ",";
    os << (route == "both" ? "u_fourier,u_convolution" : "u") << "\n";

    double max_route_diff = 0.0;
    for (Eigen::Index i = 0; i < spec.grid.size(); ++i) {
        Eigen::VectorXd p = spec.grid.point(i);
        for (int d = 0; d < m; ++d) os << format_double(p[d]) << ",";
        const Eigen::VectorXd x = p.head(m - 1);
        const double y = p[m - 1];
        if (route == "fourier") {
            os << format_double(reconstruct(*hs, x, y)) << "\n";
        } else if (route == "convolution") {
            os << format_double(convolve_halfplane(f, x[0], y - L, cfg.quad)) << "\n";
        } else {
            const double uf = reconstruct(*hs, x, y);
            const double uc = convolve_halfplane(f, x[0], y - L, cfg.quad);
            max_route_diff = std::max(max_route_diff, std::abs(uf - uc));
            os << format_double(uf) << "," << format_double(uc) << "\n";
        }
    }

    // diagnostics sidecar
    json diag;
    diag["status"] = "pass";
    diag["metrics"]["m"] = m;
    diag["metrics"]["n"] = n;
    diag["metrics"]["L"] = L;
    if (hs) {
        diag["metrics"]["w_max"] = hs->wgrid[0].w_max;
        diag["metrics"]["nodes_per_axis"] = hs->wgrid[0].nodes.size();
        diag["metrics"]["truncation_bound_at_x_m_min"] = truncation_bound(*hs, x_m_min);
        diag["metrics"]["coefficient_quadrature_converged"] = hs->quad_converged;
    }
    if (route == "both") diag["metrics"]["max_route_diff"] = max_route_diff;
    diag["provenance"] = provenance({{"f", f_spec}, {"grid", grid_spec}, {"route", route}});
    emit_json(diag, out_path + ".json");
    return 0;
}

int run_halfspace_cross_validate(const std::string& f_spec, const std::string& grid_spec,
                                 double tol, double quad_tol, const std::string& out_path) {
    auto f = parse_boundary_data(f_spec, 1);
    auto spec = parse_grid_spec(grid_spec);
    if (spec.grid.dims() != 2) throw ConfigError("cross-validate: grid must be 2-d (x, y)");
    std::vector<Eigen::Vector2d> pts;
    for (Eigen::Index i = 0; i < spec.grid.size(); ++i) {
        Eigen::VectorXd p = spec.grid.point(i);
        if (!(p[1] > 0)) throw ConfigError("cross-validate: grid heights must be > 0");
        pts.emplace_back(p[0], p[1]);
    }
    HalfspaceConfig cfg;
    cfg.quad.abs_tol = quad_tol;
    auto rep = cross_validate(f, pts, tol, cfg);

    json j;
    j["status"] = rep.pass ? "pass" : "fail";
    j["metrics"]["max_abs_diff"] = rep.max_abs_diff;
    j["metrics"]["tol"] = tol;
    j["metrics"]["points"] = pts.size();
    j["per_point"] = rep.per_point;
    j["provenance"] = provenance({{"f", f_spec}, {"grid", grid_spec}});
    emit_json(j, out_path);
    return rep.pass ? 0 : 1;
}

int run_evolve_verify(const std::string& type, const std::string& config_path, int points,
                      std::uint64_t seed, double tol, const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = spacetime_from_json(config);
    const std::string config_type =
        sol.time.type == TimeFactor::Type::Parabolic ? "parabolic" : "hyperbolic";
    if (!type.empty() && type != config_type)
        throw ConfigError("evolve verify: --type disagrees with the config");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::vector<std::pair<Eigen::VectorXd, double>> pts;
    for (int i = 0; i < points; ++i) {
        Eigen::VectorXd x(sol.dims());
        for (int d = 0; d < sol.dims(); ++d) x[d] = coord(rng);
        pts.emplace_back(std::move(x), coord(rng));
    }
    auto rep = spacetime_residual(sol, pts, tol);

    json j;
    j["status"] = rep.pass ? "pass" : "fail";
    j["metrics"]["max_rel"] = rep.max_rel;
    j["metrics"]["tol"] = tol;
    j["metrics"]["k"] = sol.time.k;
    j["metrics"]["seed"] = seed;
    j["per_point"] = rep.per_point;
    j["provenance"] = provenance(config);
    emit_json(j, out_path);
    return rep.pass ? 0 : 1;
}

int run_evolve_sample(const std::string& config_path, const std::string& grid_spec,
                      const std::string& out_path) {
    json config = load_config(config_path);
    auto sol = spacetime_from_json(config);
    auto spec = parse_grid_spec(grid_spec);
    if (spec.grid.dims() != sol.dims() + 1)
        throw ConfigError("evolve sample: grid needs the m spatial axes plus time");

    std::ofstream os(out_path);
    if (!os) throw ConfigError("cannot open output file: " + out_path);
    write_csv_header(os, spec.names);
    for (Eigen::Index i = 0; i < spec.grid.size(); ++i) {
        Eigen::VectorXd p = spec.grid.point(i);
        for (int d = 0; d < spec.grid.dims(); ++d) os << format_double(p[d]) << ",";
        os << format_double(sol.eval(p.head(sol.dims()), p[spec.grid.dims() - 1])) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"separable polyharmonic solutions and half-space Dirichlet solvers"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "emit the Laplacian power expansion");
    int n = 1, m = 2;
    std::string format = "json", out_path;
    expand_cmd->add_option("--n", n, "operator power")->required();
    expand_cmd->add_option("--m", m, "dimension")->required();
    expand_cmd->add_option("--format", format, "json|csv|text");
    expand_cmd->add_option("--out", out_path, "output path (default stdout)");

    // build
    auto* build_cmd = app.add_subcommand("build", "validate a separable solution config");
    std::string config_path;
    build_cmd->add_option("--config", config_path, "solution JSON")->required();
    build_cmd->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "residual check of a separable solution");
    int points = 50;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    verify_cmd->add_option("--config", config_path, "solution JSON")->required();
    verify_cmd->add_option("--points", points, "number of random sample points");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--tol", tol, "relative residual tolerance");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    // fd-verify
    auto* fd_cmd = app.add_subcommand("fd-verify", "finite-difference convergence check");
    std::string point_spec = "0.7,1.3", ladder_spec = "default";
    int fd_n = 1;
    fd_cmd->add_option("--config", config_path, "solution JSON")->required();
    fd_cmd->add_option("--n", fd_n, "operator power to apply")->required();
    fd_cmd->add_option("--point", point_spec, "comma-separated coordinates");
    fd_cmd->add_option("--h-ladder", ladder_spec, "'default' or comma-separated steps");
    fd_cmd->add_option("--out", out_path, "output path (default stdout)");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "sample a solution on a grid to CSV");
    std::string grid_spec;
    sample_cmd->add_option("--config", config_path, "solution JSON")->required();
    sample_cmd->add_option("--grid", grid_spec, "axis spec, e.g. x1=-2:2:41,x2=0:4:41")->required();
    sample_cmd->add_option("--out", out_path, "output CSV path")->required();

    // halfspace
    auto* half_cmd = app.add_subcommand("halfspace", "half-space Dirichlet problem");
    half_cmd->require_subcommand(1);
    auto* solve_cmd = half_cmd->add_subcommand("solve", "solve and sample on a grid");
    std::string f_spec = "heaviside", route = "both";
    double L = 0.0, w_max = 0.0, quad_tol = 1e-10;
    int hs_n = 1, hs_m = 2;
    solve_cmd->add_option("--f", f_spec, "heaviside | gaussian:w | box:a,b | file.csv");
    solve_cmd->add_option("--L", L, "boundary offset");
    solve_cmd->add_option("--n", hs_n, "operator power");
    solve_cmd->add_option("--m", hs_m, "dimension");
    solve_cmd->add_option("--grid", grid_spec, "m-axis grid spec")->required();
    solve_cmd->add_option("--route", route, "fourier|convolution|both");
    solve_cmd->add_option("--w-max", w_max, "frequency truncation (0 = auto)");
    solve_cmd->add_option("--quad-tol", quad_tol, "quadrature absolute tolerance");
    solve_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* cv_cmd = half_cmd->add_subcommand("cross-validate", "Fourier route vs convolution route");
    double cv_tol = 1e-4;
    cv_cmd->add_option("--f", f_spec, "boundary data spec");
    cv_cmd->add_option("--grid", grid_spec, "2-d grid of test points")->required();
    cv_cmd->add_option("--tol", cv_tol, "max absolute difference allowed");
    cv_cmd->add_option("--quad-tol", quad_tol, "quadrature absolute tolerance");
    cv_cmd->add_option("--out", out_path, "output path (default stdout)");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "parabolic/hyperbolic variants");
    evolve_cmd->require_subcommand(1);
    auto* ev_verify = evolve_cmd->add_subcommand("verify", "space-time residual check");
    std::string ev_type;
    double ev_tol = 1e-10;
    ev_verify->add_option("--type", ev_type, "parabolic|hyperbolic (checked against config)");
    ev_verify->add_option("--config", config_path, "space-time solution JSON")->required();
    ev_verify->add_option("--points", points, "number of random sample points");
    ev_verify->add_option("--seed", seed, "RNG seed");
    ev_verify->add_option("--tol", ev_tol, "relative residual tolerance");
    ev_verify->add_option("--out", out_path, "output path (default stdout)");

    auto* ev_sample = evolve_cmd->add_subcommand("sample", "sample u(x, t) on a grid to CSV");
    ev_sample->add_option("--config", config_path, "space-time solution JSON")->required();
    ev_sample->add_option("--grid", grid_spec, "spatial axes plus time axis")->required();
    ev_sample->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand_cmd->parsed()) return run_expand(n, m, format, out_path);
        if (build_cmd->parsed()) return run_build(config_path, out_path);
        if (verify_cmd->parsed()) return run_verify(config_path, points, seed, tol, out_path);
        if (fd_cmd->parsed())
            return run_fd_verify(config_path, fd_n, point_spec, ladder_spec, out_path);
        if (sample_cmd->parsed()) return run_sample(config_path, grid_spec, out_path);
        if (solve_cmd->parsed())
            return run_halfspace_solve(f_spec, L, hs_n, hs_m, grid_spec, route, w_max, quad_tol,
                                       out_path);
        if (cv_cmd->parsed())
            return run_halfspace_cross_validate(f_spec, grid_spec, cv_tol, quad_tol, out_path);
        if (ev_verify->parsed())
            return run_evolve_verify(ev_type, config_path, points, seed, ev_tol, out_path);
        if (ev_sample->parsed()) return run_evolve_sample(config_path, grid_spec, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
