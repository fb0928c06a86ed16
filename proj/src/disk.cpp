#include "rieszdisk/disk.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "rieszdisk/quadrature.hpp"
#include "rieszdisk/specfun.hpp"

namespace rieszdisk {

double equilibrium_density(const RieszParams& params, double R, double r) {
    if (r < 0.0 || r >= R) throw std::domain_error("equilibrium_density: need 0 <= r < R");
    double d = params.d, lam = params.lambda;
    double c = gamma_fn((d + 2.0 * lam - 1.0) / 2.0) /
               (std::pow(M_PI, (d - 1.0) / 2.0) * gamma_fn(lam));
    return c / std::pow(R, d + 2.0 * lam - 3.0) * std::pow(R * R - r * r, lam - 1.0);
}

double disk_capacity(const RieszParams& params, double R) {
    if (R <= 0.0) throw std::domain_error("disk_capacity: R must be positive");
    double d = params.d, lam = params.lambda;
    return params.sin_lpi() * gamma_fn(lam) * gamma_fn((d - 1.0) / 2.0) /
           (M_PI * gamma_fn((d + 2.0 * lam - 1.0) / 2.0)) * std::pow(R, d + 2.0 * lam - 3.0);
}

double disk_robin_constant(const RieszParams& params, double R) {
    return 1.0 / disk_capacity(params, R);
}

namespace {

// Chebyshev-type grid on [0,R] clustered at r = R.
std::vector<double> edge_grid(double R, int n) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = R * std::sin(0.5 * M_PI * i / (n - 1.0));
    r.back() = R;
    return r;
}

// spline-backed g and g' for fast repeated F evaluation
struct GSplines {
    CubicSpline g, gp;
    RadialFunction as_radial() const {
        return RadialFunction{[this](double r) { return g(r); },
                              [this](double r) { return gp(r); }, nullptr};
    }
};

GSplines build_g_splines(const RadialFunction& Q, const RieszParams& params, double R, int n) {
    std::vector<double> knots;
    for (double x = 1e-7 * R; x < 0.02 * R; x *= 2.0) knots.push_back(x);
    int m = 320;
    for (int i = 0; i <= m; ++i) {
        double th = M_PI * i / m;
        knots.push_back(0.02 * R + (R - 0.02 * R) * 0.5 * (1.0 - std::cos(th)));
    }
    std::vector<double> gv(knots.size()), gpv(knots.size());
    for (size_t i = 0; i < knots.size(); ++i) {
        gv[i] = field_to_g(Q, params, knots[i], n);
        gpv[i] = field_to_g_deriv(Q, params, knots[i], n);
    }
    return GSplines{CubicSpline(knots, gv), CubicSpline(knots, gpv)};
}

}  // namespace

EquilibriumResult solve_on_disk(const RadialFunction& Q, const RieszParams& params, double R,
                                int grid_n) {
    if (grid_n < 16) throw std::domain_error("solve_on_disk: grid_n must be >= 16");
    if (R <= 0.0) throw std::domain_error("solve_on_disk: R must be positive");
    Q.require_deriv1("solve_on_disk");
    Q.require_deriv2("solve_on_disk");
    double d = params.d, lam = params.lambda;

    auto gspl = std::make_shared<GSplines>(build_g_splines(Q, params, R, 64));
    RadialFunction gfun{[gspl](double r) { return gspl->g(r); },
                        [gspl](double r) { return gspl->gp(r); }, nullptr};
    auto F = [gfun, params, R](double t) {
        return F_transform_of_g(gfun, params, t, R, 48);
    };

    // mass of F against t^{d-2}; F carries the (R^2-t^2)^{lambda-1} edge, which is
    // peeled off and folded into the Gauss-Jacobi weight
    double massF = integrate_singular(
        [&](double t) {
            return F(t) * std::pow(R * R - t * t, 1.0 - lam) * std::pow(t, d - 2.0) *
                   std::pow(R + t, lam - 1.0);
        },
        0.0, R, 0.0, lam - 1.0, -1.0, -1.0, 48);

    double C_Q = 2.0 * gamma_fn((d - 1.0) / 2.0 + lam) / (gamma_fn(lam) * gamma_fn((d - 1.0) / 2.0)) /
                 std::pow(R, d + 2.0 * lam - 3.0) *
                 (gamma_fn((d - 1.0) / 2.0) / (2.0 * std::pow(M_PI, (d - 1.0) / 2.0)) - massF);
    double F_Q = C_Q * std::pow(M_PI, (d + 1.0) / 2.0) /
                 (params.sin_lpi() * gamma_fn((d - 1.0) / 2.0));

    EquilibriumResult res{params, Support{0.0, R}, RadialDensity{}, DensityGrid{}, C_Q, F_Q};
    res.density.a = 0.0;
    res.density.b = R;
    res.density.inner_exp = 0.0;
    res.density.outer_exp = lam - 1.0;
    res.density.smooth = [C_Q, F, R, lam](double t) {
        double tc = std::min(t, R * (1.0 - 1e-12));  // F(R) is a removable limit
        return C_Q + F(tc) * std::pow(std::max(R * R - tc * tc, 0.0), 1.0 - lam);
    };

    res.grid.r = edge_grid(R, grid_n);
    res.grid.f.resize(grid_n);
    double minf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        double r = std::min(res.grid.r[i], R * (1.0 - 1e-12));
        res.grid.f[i] = res.density(r);
        minf = std::min(minf, res.grid.f[i]);
    }
    res.mass = measure_mass(res.density, params.d);
    res.min_density = minf;
    res.valid = (minf >= -1e-9);
    return res;
}

double robin_constant(const EquilibriumResult& result) { return result.F_Q; }

}  // namespace rieszdisk
