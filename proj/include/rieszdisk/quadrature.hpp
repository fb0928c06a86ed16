#pragma once

#include <functional>
#include <vector>

namespace rieszdisk {

/// Nodes/weights for integral_{-1}^{1} (1-x)^alpha (1+x)^beta f(x) dx.
/// kind: gauss_legendre is gauss_jacobi with alpha = beta = 0.
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, inside (-1,1)
    std::vector<double> weights;  // positive
    double alpha = 0.0, beta = 0.0;
};

/// Golub-Welsch Gauss-Jacobi rule; results are cached per (n, alpha, beta).
const QuadratureRule& gauss_jacobi(int n, double alpha, double beta);
inline const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Single-panel integral_lo^hi (hi-x)^alpha_hi (x-lo)^beta_lo f(x) dx, f smooth.
double gj_panel(const std::function<double(double)>& f, double lo, double hi, double alpha_hi,
                double beta_lo, int n);

/**
 * integral_lo^hi (x-lo)^beta_lo (hi-x)^alpha_hi f(x) dx.
 *
 * The endpoint weights are absorbed by Gauss-Jacobi panels. scale_lo/scale_hi
 * give the distance from that endpoint to the nearest singularity of f lying
 * OFF the interval (pass a negative value for "none"); panels grow
 * geometrically away from the endpoint so that per-panel analyticity margins
 * stay uniform.
 */
double integrate_singular(const std::function<double(double)>& f, double lo, double hi,
                          double beta_lo = 0.0, double alpha_hi = 0.0, double scale_lo = -1.0,
                          double scale_hi = -1.0, int n = 40);

/// Adaptive Gauss-Legendre for smooth integrands (pair GL(10)/GL(21) with bisection).
double adaptive_gl(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-12, int max_depth = 48);

}  // namespace rieszdisk
