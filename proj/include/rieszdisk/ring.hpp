#pragma once

#include <vector>

#include "rieszdisk/density.hpp"
#include "rieszdisk/params.hpp"
#include "rieszdisk/radial.hpp"

namespace rieszdisk {

struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nystrom discretization controls.
struct NystromConfig {
    int n_nodes = 128;
    enum class Rule { gauss_legendre, gauss_jacobi } rule = Rule::gauss_jacobi;
    enum class DiagRegularization { limit_formula, epsilon_shift } diag =
        DiagRegularization::limit_formula;
    double epsilon = 1e-7;       // used by epsilon_shift
    double cond_limit = 1e12;    // refuse above this
    void validate() const {
        if (n_nodes < 8) throw std::domain_error("NystromConfig: n_nodes must be >= 8");
    }
};

/// Symmetric ring kernel K(u,r) of the Fredholm equation; removable singularity
/// on the diagonal is evaluated by the analytic derivative form.
double ring_kernel(double u, double r, double a, const RieszParams& params);

/// F_Q-coefficient of the right-hand side (the incomplete-Beta bracket), scaled
/// so that the equation reads G(r) + int M G = F_Q*A(r) - B(r).
double ring_rhs_A(double r, double a, const RieszParams& params);

/// Field part of the right-hand side, same scaling (needs Q').
double ring_rhs_B(const RadialFunction& Q, const RieszParams& params, double a, double r,
                  int n = 48);

struct RingSolution {
    RieszParams params;
    double a = 0.0, b = 1.0;
    double F_Q = 0.0;
    std::vector<double> nodes;   // Nystrom nodes
    std::vector<double> G_grid;  // G at the nodes (combined F_Q*G_A - G_B)
    RadialDensity density;
    DensityGrid grid;            // density samples
    double residual_norm = 0.0;  // discrete system residual (inf norm, relative)
    double condition = 0.0;
    double mass = 0.0;
    double min_density = 0.0;
    bool nonnegative = true;

    CubicSpline G_spline;        // combined G for residual checks / recovery
    CubicSpline G_A_spline;      // per-solve interpolants (self-convergence checks)
    CubicSpline G_B_spline;
    RadialFunction field;        // copy of Q
};

/**
 * Solves the ring problem on a prescribed ring (a,b):
 * Nystrom discretization of the second-kind equation derived from the ring
 * theorem, two solves (A and B right-hand sides), F_Q fixed by unit mass,
 * density recovered by Abel inversion of the splined G.
 */
RingSolution ring_solve(const RadialFunction& Q, const RieszParams& params, double a, double b,
                        const NystromConfig& config = {});

/// Residual of the continuous equation at r, using quadrature independent of
/// the Nystrom rule; scale with |F_Q| when judging.
double ring_equation_residual(const RingSolution& sol, double r, int n = 64);

/// Abel inversion of a splined G back to the density value at t.
double recover_density(const CubicSpline& G, const RieszParams& params, double a, double b,
                       double t);

}  // namespace rieszdisk
