// rieszdisk command-line front end: capacities, extremal densities, critical
// radii/heights, ring solves, verification, and plot-ready tables.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "rieszdisk/disk.hpp"
#include "rieszdisk/fields.hpp"
#include "rieszdisk/oracle.hpp"
#include "rieszdisk/ring.hpp"
#include "rieszdisk/support.hpp"

using json = nlohmann::ordered_json;
using namespace rieszdisk;

namespace {

constexpr int kOk = 0, kBadInput = 2, kRingNeeded = 3, kVerifyFailed = 4, kNoRoot = 5,
              kIllConditioned = 6;

struct CommonOpts {
    int d = 3;
    double lambda = NAN, s = NAN;
    std::string field = "zero";
    int grid_n = 128;
    std::string format = "json";
    std::string out;
    bool no_verify = false;
    VerificationTolerances tol;
};

void add_param_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--d", o.d, "ambient dimension (>= 3)");
    auto* lam = cmd->add_option("--lambda", o.lambda, "lambda in (0,1); s = d-3+2 lambda");
    auto* s = cmd->add_option("--s", o.s, "Riesz exponent s in (d-3, d-1)");
    lam->excludes(s);
    s->excludes(lam);
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--grid-n", o.grid_n, "density grid size")->check(CLI::Range(16, 100000));
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "write output to this path (default: stdout)");
}

void add_verify_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--no-verify", o.no_verify, "skip the potential-oracle verification");
    cmd->add_option("--tol-on", o.tol.tol_on, "on-support relative deviation tolerance");
    cmd->add_option("--tol-off", o.tol.tol_off, "off-support slack tolerance");
    cmd->add_option("--tol-mass", o.tol.tol_mass, "mass error tolerance");
    cmd->add_option("--tol-pos", o.tol.tol_pos, "density negativity tolerance");
}

RieszParams make_params(const CommonOpts& o) {
    if (std::isnan(o.lambda) && std::isnan(o.s))
        throw std::domain_error("one of --lambda or --s is required");
    if (!std::isnan(o.lambda)) {
        if (!(o.lambda > 0.0 && o.lambda < 1.0))
            throw std::domain_error("lambda out of (0,1)");
        return RieszParams::from_lambda(o.d, o.lambda);
    }
    return RieszParams::from_s(o.d, o.s);
}

void ensure_finite(const json& j) {
    if (j.is_number_float() && !std::isfinite(j.get<double>()))
        throw std::runtime_error("output contains a non-finite number");
    if (j.is_structured())
        for (auto& el : j) ensure_finite(el);
}

void emit(const json& j, const std::string& out) {
    ensure_finite(j);
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot open output file " + out);
        f << j.dump(2) << "\n";
    }
}

void emit_csv(const std::vector<std::pair<std::string, const std::vector<double>*>>& cols,
              const std::string& out) {
    std::ostringstream os;
    os.precision(15);
    for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c].first;
    os << "\r\n";
    size_t rows = cols.front().second->size();
    for (size_t i = 0; i < rows; ++i) {
        for (size_t c = 0; c < cols.size(); ++c)
            os << (c ? "," : "") << (*cols[c].second)[i];
        os << "\r\n";
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out);
        f << os.str();
    }
}

json params_json(const RieszParams& p, const std::string& field) {
    return json{{"d", p.d}, {"lambda", p.lambda}, {"s", p.s}, {"field", field}};
}

json report_json(const VerificationReport& rep) {
    return json{{"max_potential_deviation_on_support", rep.max_potential_deviation_on_support},
                {"min_inequality_slack_off_support", rep.min_inequality_slack_off_support},
                {"mass_error", rep.mass_error},
                {"min_density", rep.min_density},
                {"passed", rep.passed}};
}

// rebuild an evaluable density from a stored (r, f) grid with edge exponents
RadialDensity density_from_grid(double a, double b, double ie, double oe,
                                const std::vector<double>& r, const std::vector<double>& f) {
    std::vector<double> x, w;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] <= a + 1e-9 * (b - a) || r[i] >= b - 1e-9 * (b - a)) continue;
        double v = f[i];
        if (oe != 0.0) v *= std::pow(b * b - r[i] * r[i], -oe);
        if (ie != 0.0) v *= std::pow(r[i] * r[i] - a * a, -ie);
        x.push_back(r[i]);
        w.push_back(v);
    }
    if (x.size() < 4) throw std::domain_error("density grid too small to rebuild");
    auto spl = std::make_shared<CubicSpline>(std::move(x), std::move(w));
    return RadialDensity{a, b, ie, oe, [spl](double t) { return (*spl)(t); }};
}

int run_capacity(const CommonOpts& o, double R) {
    auto params = make_params(o);
    double cap = disk_capacity(params, R);
    json j{{"params", params_json(params, "")},
           {"R", R},
           {"capacity", cap},
           {"W_s", 1.0 / cap}};
    if (o.format == "csv") {
        std::vector<double> c1{cap}, c2{1.0 / cap};
        emit_csv({{"capacity", &c1}, {"W_s", &c2}}, o.out);
    } else {
        emit(j, o.out);
    }
    return kOk;
}

int run_solve(const CommonOpts& o, double R_user) {
    auto params = make_params(o);
    auto spec = FieldSpec::parse(o.field);
    auto Q = spec.to_radial(params);
    double R = R_user;
    if (std::isnan(R)) {
        auto cls = classify_support(Q);
        switch (cls.kind) {
            case SupportDecision::Kind::full_disk: R = 1.0; break;
            case SupportDecision::Kind::disk: R = critical_radius(Q, params); break;
            case SupportDecision::Kind::ring:
                if (cls.rationale == SupportDecision::Rationale::field_convex) {
                    std::cerr << "support is a ring with unknown radii; use the ring "
                                 "command with --a/--b\n";
                    return kRingNeeded;
                }
                R = 1.0;  // decreasing field: b = 1, attempt the full disk
                break;
            case SupportDecision::Kind::unknown:
                R = 1.0;  // outside the theorem's hypotheses; report via verification
                break;
        }
    }
    auto res = solve_on_disk(Q, params, R, o.grid_n);
    json j{{"params", params_json(params, spec.describe())},
           {"support", json{{"kind", "disk"}, {"a", 0.0}, {"b", R}}},
           {"F_Q", res.F_Q},
           {"C_Q", res.C_Q},
           {"density", json{{"r", res.grid.r},
                            {"f", res.grid.f},
                            {"inner_exponent", res.density.inner_exp},
                            {"outer_exponent", res.density.outer_exp},
                            {"mass", res.mass},
                            {"min_density", res.min_density}}},
           {"verification", nullptr}};
    bool ok = true;
    if (!o.no_verify) {
        auto rep = verify(res, Q, o.tol);
        j["verification"] = report_json(rep);
        ok = rep.passed;
    }
    if (o.format == "csv")
        emit_csv({{"r", &res.grid.r}, {"f", &res.grid.f}}, o.out);
    else
        emit(j, o.out);
    return ok ? kOk : kVerifyFailed;
}

int run_critical_radius(const CommonOpts& o) {
    auto params = make_params(o);
    auto spec = FieldSpec::parse(o.field);
    auto Q = spec.to_radial(params);
    double R = critical_radius(Q, params);
    emit(json{{"params", params_json(params, spec.describe())},
              {"R_star", R},
              {"ms_functional", ms_functional(Q, params, R)}},
         o.out);
    return kOk;
}

int run_critical_height(const CommonOpts& o, double q) {
    auto params = make_params(o);
    PointChargeField field{q, 1.0};
    if (o.field.rfind("point", 0) == 0) {
        auto spec = FieldSpec::parse(o.field);
        if (spec.kind != FieldSpec::Kind::point_charge)
            throw std::domain_error("critical-height requires a point-charge field");
        field = spec.point;
    }
    field.validate();
    auto ch = critical_height(field, params);
    emit(json{{"params", params_json(params, "point:q=" + std::to_string(q))},
              {"h_minus", ch.h_minus},
              {"h_plus_candidates", ch.h_plus_candidates},
              {"h_plus", ch.h_plus},
              {"threshold", ch.threshold},
              {"root_found", ch.root_found}},
         o.out);
    return ch.root_found ? kOk : kNoRoot;
}

int run_ring(const CommonOpts& o, double a, double b, int nodes) {
    auto params = make_params(o);
    auto spec = FieldSpec::parse(o.field);
    auto Q = spec.to_radial(params);
    NystromConfig config;
    config.n_nodes = nodes;
    auto sol = ring_solve(Q, params, a, b, config);
    json j{{"params", params_json(params, spec.describe())},
           {"support", json{{"kind", "ring"}, {"a", a}, {"b", b}}},
           {"F_Q", sol.F_Q},
           {"G", json{{"r", sol.nodes}, {"G", sol.G_grid}}},
           {"density", json{{"r", sol.grid.r},
                            {"f", sol.grid.f},
                            {"inner_exponent", sol.density.inner_exp},
                            {"outer_exponent", sol.density.outer_exp},
                            {"mass", sol.mass},
                            {"min_density", sol.min_density}}},
           {"residual_norm", sol.residual_norm},
           {"condition", sol.condition},
           {"verification", nullptr}};
    bool ok = true;
    if (!o.no_verify) {
        VerificationTolerances tol = o.tol;
        auto rep = verify(sol, tol);
        j["verification"] = report_json(rep);
        ok = rep.passed;
    }
    if (o.format == "csv")
        emit_csv({{"r", &sol.grid.r}, {"f", &sol.grid.f}}, o.out);
    else
        emit(j, o.out);
    return ok ? kOk : kVerifyFailed;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open input file " + path);
    json j;
    in >> j;
    return j;
}

int run_verify(const CommonOpts& o, const std::string& input) {
    json j = load_json(input);
    auto params = RieszParams::from_lambda(j["params"]["d"].get<int>(),
                                           j["params"]["lambda"].get<double>());
    auto spec = FieldSpec::parse(j["params"]["field"].get<std::string>());
    auto Q = spec.to_radial(params);
    auto dens = density_from_grid(
        j["support"]["a"].get<double>(), j["support"]["b"].get<double>(),
        j["density"]["inner_exponent"].get<double>(), j["density"]["outer_exponent"].get<double>(),
        j["density"]["r"].get<std::vector<double>>(),
        j["density"]["f"].get<std::vector<double>>());
    auto rep = verify(dens, j["F_Q"].get<double>(), Q, params, o.tol);
    emit(report_json(rep), o.out);
    return rep.passed ? kOk : kVerifyFailed;
}

int run_plot_data(const CommonOpts& o, const std::string& input, bool potential) {
    json j = load_json(input);
    auto r = j["density"]["r"].get<std::vector<double>>();
    auto f = j["density"]["f"].get<std::vector<double>>();
    if (!potential) {
        emit_csv({{"r", &r}, {"f", &f}}, o.out);
        return kOk;
    }
    auto params = RieszParams::from_lambda(j["params"]["d"].get<int>(),
                                           j["params"]["lambda"].get<double>());
    auto spec = FieldSpec::parse(j["params"]["field"].get<std::string>());
    auto Q = spec.to_radial(params);
    auto dens = density_from_grid(
        j["support"]["a"].get<double>(), j["support"]["b"].get<double>(),
        j["density"]["inner_exponent"].get<double>(), j["density"]["outer_exponent"].get<double>(),
        r, f);
    std::vector<double> u(r.size());
    for (size_t i = 0; i < r.size(); ++i)
        u[i] = potential_of_density(dens, params, r[i]) + Q.eval(r[i]);
    emit_csv({{"r", &r}, {"weighted_potential", &u}}, o.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Riesz equilibrium measures on the hyperdisk"};
    app.require_subcommand(1);
    CommonOpts o;
    double R_cap = 1.0, R_user = NAN, a = 0.0, b = 1.0, q = 1.0;
    int nodes = 128;
    std::string input;
    bool potential = false;

    auto* cap = app.add_subcommand("capacity", "Riesz capacity of the disk D_R");
    add_param_opts(cap, o);
    cap->add_option("--R", R_cap, "disk radius");
    add_output_opts(cap, o);

    auto* solve = app.add_subcommand("solve", "extremal measure on a disk support");
    add_param_opts(solve, o);
    solve->add_option("--field", o.field, "field spec: zero|monomial:q=,alpha=|point:q=,h=|table:path");
    solve->add_option("--R", R_user, "override the support radius");
    add_output_opts(solve, o);
    add_verify_opts(solve, o);

    auto* crad = app.add_subcommand("critical-radius", "Mhaskar-Saff support radius R*");
    add_param_opts(crad, o);
    crad->add_option("--field", o.field, "field spec (convex increasing)");
    add_output_opts(crad, o);

    auto* ch = app.add_subcommand("critical-height", "point-charge critical height");
    add_param_opts(ch, o);
    ch->add_option("--q", q, "charge magnitude (> 0)");
    ch->add_option("--field", o.field, "alternatively: point:q=<f>,h=<f>");
    add_output_opts(ch, o);

    auto* ring = app.add_subcommand("ring", "ring-support Fredholm solve");
    add_param_opts(ring, o);
    ring->add_option("--field", o.field, "field spec");
    ring->add_option("--a", a, "inner radius")->required();
    ring->add_option("--b", b, "outer radius")->required();
    ring->add_option("--nodes", nodes, "Nystrom node budget");
    add_output_opts(ring, o);
    add_verify_opts(ring, o);

    auto* ver = app.add_subcommand("verify", "re-verify a stored solve output");
    ver->add_option("--input", input, "path to a solve/ring JSON output")->required();
    add_output_opts(ver, o);
    add_verify_opts(ver, o);

    auto* plot = app.add_subcommand("plot-data", "two-column CSV from a stored solve output");
    plot->add_option("--input", input, "path to a solve/ring JSON output")->required();
    plot->add_flag("--potential", potential, "emit (r, U+Q) instead of (r, f)");
    add_output_opts(plot, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    try {
        if (app.got_subcommand(cap)) return run_capacity(o, R_cap);
        if (app.got_subcommand(solve)) return run_solve(o, R_user);
        if (app.got_subcommand(crad)) return run_critical_radius(o);
        if (app.got_subcommand(ch)) return run_critical_height(o, q);
        if (app.got_subcommand(ring)) return run_ring(o, a, b, nodes);
        if (app.got_subcommand(ver)) return run_verify(o, input);
        if (app.got_subcommand(plot)) return run_plot_data(o, input, potential);
    } catch (const IllConditionedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIllConditioned;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
