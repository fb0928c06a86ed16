#include <doctest.h>

#include <cmath>
#include <random>

#include "rieszdisk/disk.hpp"
#include "rieszdisk/fields.hpp"
#include "rieszdisk/oracle.hpp"
#include "rieszdisk/ring.hpp"
#include "rieszdisk/specfun.hpp"
#include "rieszdisk/support.hpp"

using namespace rieszdisk;

TEST_CASE("kernel triple agreement across the parameter matrix") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ur(0.05, 1.0);
    for (auto [d, lam] : std::vector<std::pair<int, double>>{
             {3, 0.5}, {4, 0.5}, {5, 0.3}, {8, 0.5}, {4, 0.75}}) {
        auto params = RieszParams::from_lambda(d, lam);
        for (int i = 0; i < 100; ++i) {
            double r = ur(rng), rho = ur(rng);
            if (std::abs(r - rho) < 5e-3) continue;
            double k1 = reduced_kernel_hypergeometric(r, rho, params);
            double k2 = reduced_kernel_direct(r, rho, params);
            double k3 = reduced_kernel_copson(r, rho, params);
            CHECK(k2 == doctest::Approx(k1).epsilon(1e-9));
            CHECK(k3 == doctest::Approx(k1).epsilon(1e-9));
        }
    }
}

TEST_CASE("kernel against brute-force circle quadrature in d = 3") {
    // d = 3: the angular average is a plain integral over S^1
    auto params = RieszParams::from_lambda(3, 0.5);  // s = 1
    double r = 1.0, rho = 0.5;
    int N = 200000;
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        double phi = 2.0 * M_PI * (i + 0.5) / N;
        acc += 1.0 / std::sqrt(r * r + rho * rho - 2.0 * r * rho * std::cos(phi));
    }
    double brute = rho * (2.0 * M_PI / N) * acc;
    CHECK(reduced_kernel_hypergeometric(r, rho, params) ==
          doctest::Approx(brute).epsilon(1e-9));
}

TEST_CASE("kernel limits and errors") {
    auto params = RieszParams::from_lambda(4, 0.6);
    // rho -> 0: k -> 2 pi^{(d-1)/2} rho^{d-2} / Gamma((d-1)/2) r^{-s}
    double rho = 1e-5, r = 0.7;
    double expect = 2.0 * std::pow(M_PI, 1.5) / gamma_fn(1.5) * std::pow(rho, 2.0) *
                    std::pow(r, -params.s);
    CHECK(reduced_kernel_hypergeometric(r, rho, params) ==
          doctest::Approx(expect).epsilon(1e-8));
    CHECK_THROWS_AS(reduced_kernel_hypergeometric(0.5, 0.5, params), std::domain_error);
    CHECK_THROWS_AS(reduced_kernel_direct(0.5, 0.5, params), std::domain_error);
}

TEST_CASE("potential of the equilibrium measure is the Robin constant") {
    for (auto [d, lam, R] : std::vector<std::tuple<int, double, double>>{
             {3, 0.5, 1.0}, {5, 0.3, 0.8}, {4, 0.75, 1.0}}) {
        auto params = RieszParams::from_lambda(d, lam);
        double c = gamma_fn((d + 2.0 * lam - 1.0) / 2.0) /
                   (std::pow(M_PI, (d - 1.0) / 2.0) * gamma_fn(lam)) /
                   std::pow(R, d + 2.0 * lam - 3.0);
        RadialDensity dens{0.0, R, 0.0, lam - 1.0, [c](double) { return c; }};
        double W = disk_robin_constant(params, R);
        for (double r : {0.02 * R, 0.1 * R, 0.5 * R, 0.9 * R})
            CHECK(potential_of_density(dens, params, r) == doctest::Approx(W).epsilon(1e-9));
        // U(0) special case
        CHECK(potential_of_density(dens, params, 0.0) == doctest::Approx(W).epsilon(1e-9));
    }
}

TEST_CASE("point-mass limit of the potential") {
    auto params = RieszParams::from_lambda(3, 0.5);
    // density concentrated near rho0; U(r) ~ k(r, rho0) * radial mass
    double rho0 = 0.55, w = 5e-4;
    RadialDensity dens{rho0 - w, rho0 + w, 0.0, 0.0, [](double) { return 1.0; }};
    double m = radial_mass(dens, 3);
    double U = potential_of_density(dens, params, 0.2);
    CHECK(U == doctest::Approx(reduced_kernel_hypergeometric(0.2, rho0, params) /
                               std::pow(rho0, 1.0) * m)
                   .epsilon(1e-5));
}

TEST_CASE("weighted potential of disk solutions is constant") {
    auto params = RieszParams::from_lambda(3, 0.5);
    MonomialField mf{3.0 * M_PI, 2.0};
    auto Q = to_radial(mf);
    double R = monomial_support_radius(mf, params);
    auto res = solve_on_disk(Q, params, R, 64);
    auto dens = resample_density(res.density);
    for (double r : {0.02 * R, 0.2 * R, 0.5 * R, 0.9 * R}) {
        double u = potential_of_density(dens, params, r) + Q.eval(r);
        CHECK(u == doctest::Approx(res.F_Q).epsilon(5e-5));
    }
    // off the support the inequality is strict for r > R*
    for (double r : {R + 0.01, 0.8, 1.0}) {
        double u = potential_of_density(dens, params, r) + Q.eval(r);
        CHECK(u - res.F_Q > -1e-6);
    }
}

TEST_CASE("energy consistency for the zero field") {
    auto params = RieszParams::from_lambda(3, 0.5);
    double c = gamma_fn(1.5) / (M_PI * gamma_fn(0.5));
    RadialDensity dens{0.0, 1.0, 0.0, -0.5, [c](double) { return c; }};
    double E = energy_of_density(dens, params);
    CHECK(E == doctest::Approx(M_PI / 2.0).epsilon(1e-5));
}

TEST_CASE("verify() reports") {
    auto params = RieszParams::from_lambda(3, 0.5);
    // zero field on the unit disk passes
    auto res = solve_on_disk(zero_field(), params, 1.0, 48);
    auto rep = verify(res, zero_field());
    CHECK(rep.passed);
    CHECK(std::abs(rep.mass_error) < 1e-8);
    CHECK(rep.max_potential_deviation_on_support < 1e-6);
    CHECK(rep.min_density > 0.0);
    // json field names are stable
    auto js = rep.to_json();
    CHECK(js.find("max_potential_deviation_on_support") != std::string::npos);
    CHECK(js.find("min_inequality_slack_off_support") != std::string::npos);
    CHECK(js.find("mass_error") != std::string::npos);
    CHECK(js.find("min_density") != std::string::npos);
    CHECK(js.find("passed") != std::string::npos);

    // point charge below the critical height on the full disk fails on negativity
    PointChargeField low{1.0, 0.3};
    auto bad = solve_on_disk(to_radial(low, params), params, 1.0, 48);
    auto brep = verify(bad, to_radial(low, params));
    CHECK_FALSE(brep.passed);
    CHECK(brep.min_density < 0.0);
}

TEST_CASE("verify() accepts ring solutions") {
    auto params = RieszParams::from_lambda(3, 0.5);
    PointChargeField pf{1.0, 0.4};
    auto Q = to_radial(pf, params);
    NystromConfig config;
    config.n_nodes = 160;
    auto sol = ring_solve(Q, params, 0.2, 1.0, config);
    auto rep = verify(sol);
    // user-chosen (a,b) is not the true support: density negative near the
    // inner edge, but the potential stays constant on the ring
    CHECK(rep.max_potential_deviation_on_support < 5e-4);
    CHECK(std::abs(rep.mass_error) < 1e-6);
    CHECK(rep.min_density < 0.0);
    CHECK_FALSE(rep.passed);
}

TEST_CASE("potential accuracy improves with resampling resolution") {
    auto params = RieszParams::from_lambda(4, 0.6);
    MonomialField mf{8.0, 2.0};
    auto Q = to_radial(mf);
    double R = monomial_support_radius(mf, params);
    auto res = solve_on_disk(Q, params, R, 48);
    auto dev_with = [&](int knots) {
        auto dens = resample_density(res.density, knots);
        double dev = 0.0;
        for (double r : {0.1 * R, 0.4 * R, 0.7 * R, 0.93 * R})
            dev = std::max(dev, std::abs(potential_of_density(dens, params, r) + Q.eval(r) -
                                         res.F_Q));
        return dev;
    };
    double d40 = dev_with(40), d80 = dev_with(80);
    CHECK(d80 <= 0.75 * d40);
}
