#pragma once

#include <optional>
#include <string>

#include "rieszdisk/density.hpp"
#include "rieszdisk/params.hpp"
#include "rieszdisk/radial.hpp"

namespace rieszdisk {

/// Support of an extremal measure.
struct Support {
    double a = 0.0;  // inner radius (0 for disks)
    double b = 1.0;  // outer radius
    bool is_disk() const { return a == 0.0; }
};

/// Result of a disk-support solve: density plus the constants of the theorem.
struct EquilibriumResult {
    RieszParams params;
    Support support;
    RadialDensity density;   // analytic-edge representation
    DensityGrid grid;        // samples on a Chebyshev grid clustered at r = b
    double C_Q = 0.0;        // coefficient of (R^2-r^2)^{lambda-1}
    double F_Q = 0.0;        // Robin constant
    double mass = 0.0;       // recomputed measure mass (should be 1)
    double min_density = 0.0;
    bool valid = true;       // false when min_density < -1e-9 (disk hypothesis fails)
};

/// Density of the no-field equilibrium measure of the disk D_R.
double equilibrium_density(const RieszParams& params, double R, double r);

/// cap_s(D_R) = sin(lambda pi) Gamma(lambda) Gamma((d-1)/2) / (pi Gamma((d+2 lambda-1)/2)) R^{d+2 lambda-3}.
double disk_capacity(const RieszParams& params, double R);

/// Robin constant of the no-field problem on D_R (= 1/cap).
double disk_robin_constant(const RieszParams& params, double R);

/**
 * Closed-form solve on a prescribed disk support D_R:
 *   f(r) = C_Q (R^2-r^2)^{lambda-1} + F(r),
 * with C_Q fixed by unit mass. A negative density is returned flagged invalid
 * rather than rejected: the sign of f is exactly the test of the disk-support
 * hypothesis for this field.
 */
EquilibriumResult solve_on_disk(const RadialFunction& Q, const RieszParams& params, double R,
                                int grid_n = 128);

/// F_Q of a result.
double robin_constant(const EquilibriumResult& result);

}  // namespace rieszdisk
