#pragma once

#include <string>

#include "rieszdisk/density.hpp"
#include "rieszdisk/disk.hpp"
#include "rieszdisk/params.hpp"
#include "rieszdisk/radial.hpp"
#include "rieszdisk/ring.hpp"

namespace rieszdisk {

/// Angular-averaged ring-to-ring interaction kernel k(r,rho) (includes the
/// rho^{d-2} surface factor): U(r) = int f(rho) k(r,rho) drho.
/// Hypergeometric form: k = 2 pi^{(d-1)/2} rho^{d-2}/Gamma((d-1)/2)
///                          max^{-s} 2F1(s/2, lambda; (d-1)/2; (min/max)^2).
double reduced_kernel_hypergeometric(double r, double rho, const RieszParams& params);

/// Funk-Hecke form: adaptive quadrature of the xi-integral
///   rho^{d-2} (2 pi^{(d-2)/2}/Gamma((d-2)/2)) int_0^pi sin^{d-3} xi (r^2+rho^2-2 r rho cos xi)^{-s/2} dxi.
double reduced_kernel_direct(double r, double rho, const RieszParams& params, double tol = 1e-12);

/// Copson/Kahane form: the one-dimensional t-integral with (x^2-t^2)^{-lambda} weights.
double reduced_kernel_copson(double r, double rho, const RieszParams& params, int n = 48);

/// Riesz potential of a radial density at radius r (Copson route: nested
/// Abel-type quadratures whose endpoint exponents are folded into
/// Gauss-Jacobi weights; valid on and off the support).
double potential_of_density(const RadialDensity& dens, const RieszParams& params, double r,
                            int n = 40);

/// Riesz energy of the measure, I_s(mu) = int U dmu.
double energy_of_density(const RadialDensity& dens, const RieszParams& params, int n = 40);

struct VerificationTolerances {
    double tol_on = 5e-5;    // relative deviation of U+Q from F_Q on the support
    double tol_off = 1e-6;   // allowed negative slack off the support
    double tol_mass = 1e-8;
    double tol_pos = 1e-9;
    int n_on = 24, n_off = 16;
};

/// Gauss-variational-inequality check of a solution.
struct VerificationReport {
    double max_potential_deviation_on_support = 0.0;  // relative to F_Q
    double min_inequality_slack_off_support = 0.0;    // min of U+Q-F_Q off support
    double mass_error = 0.0;
    double min_density = 0.0;
    bool passed = false;

    std::string to_json() const;
};

VerificationReport verify(const RadialDensity& dens, double F_Q, const RadialFunction& Q,
                          const RieszParams& params, const VerificationTolerances& tol = {});
VerificationReport verify(const EquilibriumResult& result, const RadialFunction& Q,
                          const VerificationTolerances& tol = {});
VerificationReport verify(const RingSolution& result, const VerificationTolerances& tol = {});

/// Spline-backed copy of a density (samples the smooth part once); used before
/// running many potential evaluations against densities whose smooth part is
/// itself an integral transform.
RadialDensity resample_density(const RadialDensity& dens, int knots = 600);

}  // namespace rieszdisk
